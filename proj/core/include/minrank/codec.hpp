#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "minrank/matrix.hpp"

namespace minrank {

class MalformedEncodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, std::uint64_t required)
        : std::runtime_error(what), required_budget(required) {}
    std::uint64_t required_budget;
};

/// A rank-k square matrix serialized as a row basis plus a column basis with
/// their indices. Both index lists are strictly increasing; the k x k
/// intersection submatrix is invertible.
struct BasisEncoding {
    std::size_t n;
    Field field;
    std::vector<std::size_t> row_indices;             // i_1 < ... < i_k
    std::vector<std::size_t> col_indices;             // j_1 < ... < j_k
    std::vector<std::vector<std::uint32_t>> rows;     // k rows, each of length n
    std::vector<std::vector<std::uint32_t>> columns;  // k columns, each of length n

    std::size_t rank() const noexcept { return row_indices.size(); }
};

/// Extracts bases by the greedy scan in natural index order and packages them.
/// The rank-0 (zero) matrix yields an empty encoding.
BasisEncoding encode(const Matrix& m);

/// Reconstructs the unique matrix with the stored rows, columns, and rank.
/// Validates every encoding invariant first and throws MalformedEncodingError
/// on violations (wrong sizes, dependent bases, singular intersection,
/// inconsistent row/column overlap).
Matrix decode(const BasisEncoding& enc);

/// Exact |M_{n,k,s}|: the number of n x n matrices of rank k that contain an
/// s-sparse row basis and an s-sparse column basis, by exhaustive enumeration
/// of all q^(n^2) matrices. Refuses (BudgetExceededError) when q^(n^2)
/// exceeds max_matrices.
std::uint64_t count_rank_k_sparse_base_matrices(std::size_t n, std::size_t k, std::size_t s,
                                                Field field,
                                                std::uint64_t max_matrices = 1u << 20);

/// The (n*q)^(6s) counting bound that count_rank_k_sparse_base_matrices must
/// never exceed; saturates at uint64 max.
std::uint64_t sparse_base_count_bound(std::size_t n, std::uint32_t q, std::size_t s);

}  // namespace minrank

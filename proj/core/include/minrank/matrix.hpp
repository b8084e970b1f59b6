#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "minrank/field.hpp"

namespace minrank {

/// Dense row-major matrix over a prime field. Entries are canonical values in
/// [0, q). The 0x0 matrix is permitted as the degenerate output of submatrix
/// extraction; it has rank 0 and sparsity 0.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, Field field);
    Matrix(Field field, std::initializer_list<std::initializer_list<std::uint32_t>> rows);

    static Matrix identity(std::size_t n, Field field);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::uint32_t v);

    std::span<const std::uint32_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::vector<std::uint32_t> column(std::size_t j) const;

    /// Rank over the matrix's field by Gaussian elimination with first-nonzero
    /// pivoting. Dispatches to a bit-packed path for F2 when cols <= 64.
    std::size_t rank() const;

    /// Some x with A x = b, or nullopt if the system is inconsistent.
    /// Free variables are fixed to zero, so the output is deterministic.
    std::optional<std::vector<std::uint32_t>> solve(std::span<const std::uint32_t> b) const;

    /// Number of nonzero entries, s(M).
    std::size_t sparsity() const noexcept;

    /// Nonzeros in row i plus nonzeros in column i; a nonzero diagonal entry
    /// counts twice. Requires a square matrix.
    std::size_t index_sparsity(std::size_t i) const;

    /// Scans columns in the given order (a permutation of [cols]) and keeps
    /// each column that is independent of those kept so far. The result has
    /// exactly rank() indices and spans the column space.
    std::vector<std::size_t> greedy_column_basis(std::span<const std::size_t> order) const;
    std::vector<std::size_t> greedy_row_basis(std::span<const std::size_t> order) const;

    /// Square restriction to the given sorted row=column index set.
    Matrix principal_submatrix(std::span<const std::size_t> indices) const;
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    std::vector<std::uint32_t> apply(std::span<const std::uint32_t> x) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<std::uint32_t> data_;
};

namespace detail {
/// Generic elimination rank, field-agnostic. Exposed for cross-checking the
/// bit-packed F2 path.
std::size_t rank_generic(const Matrix& m);
/// Word-parallel F2 rank; requires field order 2 and cols <= 64.
std::size_t rank_f2(const Matrix& m);
/// Rank of F2 row bitmasks (column j = bit j); destroys the input.
std::size_t rank_f2_rows(std::vector<std::uint64_t>& rows);
}  // namespace detail

}  // namespace minrank

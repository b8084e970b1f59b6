#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

/// An executable linear index code derived from a representing matrix M of a
/// knowledge graph G. The sender broadcasts y = E x where the rows of E are a
/// row basis of M; receiver i recovers x_i from y and its side information
/// {x_j : j in K_i}, where K_i is the out-neighborhood of i.
class LinearIndexCode {
public:
    std::size_t message_length() const noexcept { return n_; }
    std::size_t broadcast_length() const noexcept { return k_; }
    const Field& field() const noexcept { return encoding_.field(); }
    const Matrix& encoding_matrix() const noexcept { return encoding_; }

    /// Side-information indices K_i of receiver i.
    std::vector<std::size_t> side_information_indices(std::size_t i) const;

    std::vector<std::uint32_t> broadcast(std::span<const std::uint32_t> x) const;

    /// Recovers x_i from the broadcast and the side information alone. The map
    /// must contain exactly the keys K_i; anything missing or extraneous is
    /// rejected, which keeps the "uses only K_i" claim mechanically checkable.
    std::uint32_t decode_symbol(std::size_t i, std::span<const std::uint32_t> y,
                                const std::map<std::size_t, std::uint32_t>& side) const;

    friend LinearIndexCode build_code(const DiGraph& g, const Matrix& m);

private:
    LinearIndexCode(std::size_t n, std::size_t k, Matrix encoding)
        : n_(n), k_(k), encoding_(std::move(encoding)) {}

    std::size_t n_;
    std::size_t k_;
    Matrix encoding_;  // k x n row basis E
    std::vector<std::vector<std::uint32_t>> lambda_;  // per receiver: Row_i(M) = lambda_i * E
    std::vector<std::map<std::size_t, std::uint32_t>> side_coeffs_;  // per receiver: j -> M[i][j]
    std::vector<std::uint32_t> diagonal_;  // M[i][i]
};

/// Builds the code from a matrix that represents g; throws std::invalid_argument
/// otherwise. The broadcast length equals rank(M), so feeding an exact minrank
/// witness yields a code of optimal linear length.
LinearIndexCode build_code(const DiGraph& g, const Matrix& m);

}  // namespace minrank

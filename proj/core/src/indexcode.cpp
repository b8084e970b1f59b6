#include "minrank/indexcode.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace minrank {

LinearIndexCode build_code(const DiGraph& g, const Matrix& m) {
    if (!is_representing(m, g))
        throw std::invalid_argument("build_code: matrix does not represent the graph");
    const std::size_t n = g.vertex_count();
    const Field f = m.field();

    std::vector<std::size_t> natural(n);
    std::iota(natural.begin(), natural.end(), 0);
    const auto basis_rows = m.greedy_row_basis(natural);
    const std::size_t k = basis_rows.size();

    Matrix encoding(k, n, f);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < n; ++j) encoding(t, j) = m(basis_rows[t], j);

    LinearIndexCode code(n, k, encoding);
    const Matrix encoding_t = encoding.transpose();  // n x k
    code.lambda_.resize(n);
    code.side_coeffs_.resize(n);
    code.diagonal_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = m.row(i);
        // always consistent: the rows of E span the row space of M
        auto lambda = encoding_t.solve(row);
        if (!lambda) throw std::logic_error("build_code: row not in row-basis span");
        code.lambda_[i] = std::move(*lambda);
        code.diagonal_[i] = m(i, i);
        for (std::size_t j : g.out_neighbors(i)) code.side_coeffs_[i][j] = m(i, j);
    }
    return code;
}

std::vector<std::size_t> LinearIndexCode::side_information_indices(std::size_t i) const {
    if (i >= n_) throw std::out_of_range("receiver index out of range");
    std::vector<std::size_t> keys;
    for (const auto& [j, coeff] : side_coeffs_[i]) keys.push_back(j);
    return keys;
}

std::vector<std::uint32_t> LinearIndexCode::broadcast(std::span<const std::uint32_t> x) const {
    if (x.size() != n_)
        throw std::invalid_argument("broadcast: message length " + std::to_string(x.size()) +
                                    " != " + std::to_string(n_));
    return encoding_.apply(x);
}

std::uint32_t LinearIndexCode::decode_symbol(std::size_t i, std::span<const std::uint32_t> y,
                                             const std::map<std::size_t, std::uint32_t>& side) const {
    if (i >= n_) throw std::out_of_range("receiver index out of range");
    if (y.size() != k_) throw std::invalid_argument("decode_symbol: broadcast length mismatch");
    const auto& coeffs = side_coeffs_[i];
    if (side.size() != coeffs.size())
        throw std::invalid_argument("decode_symbol: side information must cover exactly K_i");
    const Field& f = encoding_.field();

    // Row_i(M) . x = lambda_i . y
    std::uint32_t acc = 0;
    for (std::size_t t = 0; t < k_; ++t) acc = f.add(acc, f.mul(lambda_[i][t], y[t]));
    for (const auto& [j, coeff] : coeffs) {
        const auto it = side.find(j);
        if (it == side.end())
            throw std::invalid_argument("decode_symbol: missing side-information key " +
                                        std::to_string(j));
        acc = f.sub(acc, f.mul(coeff, it->second));
    }
    return f.mul(acc, f.inv(diagonal_[i]));
}

}  // namespace minrank

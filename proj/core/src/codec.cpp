#include "minrank/codec.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace minrank {

BasisEncoding encode(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("encode requires a square matrix");
    const std::size_t n = m.rows();
    std::vector<std::size_t> natural(n);
    std::iota(natural.begin(), natural.end(), 0);

    BasisEncoding enc{n, m.field(), m.greedy_row_basis(natural), m.greedy_column_basis(natural), {}, {}};
    for (std::size_t i : enc.row_indices) {
        auto r = m.row(i);
        enc.rows.emplace_back(r.begin(), r.end());
    }
    for (std::size_t j : enc.col_indices) enc.columns.push_back(m.column(j));
    return enc;
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw MalformedEncodingError(what);
}

bool strictly_increasing(const std::vector<std::size_t>& v, std::size_t n) {
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t] >= n) return false;
        if (t > 0 && v[t] <= v[t - 1]) return false;
    }
    return true;
}

Matrix pack_vectors(const std::vector<std::vector<std::uint32_t>>& vecs, Field field,
                    bool as_rows) {
    const std::size_t k = vecs.size();
    const std::size_t n = vecs.front().size();
    Matrix m(as_rows ? k : n, as_rows ? n : k, field);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            if (as_rows)
                m(t, j) = vecs[t][j];
            else
                m(j, t) = vecs[t][j];
        }
    return m;
}

}  // namespace

Matrix decode(const BasisEncoding& enc) {
    const std::size_t n = enc.n;
    const std::size_t k = enc.row_indices.size();
    const Field& f = enc.field;

    require(enc.col_indices.size() == k && enc.rows.size() == k && enc.columns.size() == k,
            "encoding component sizes disagree");
    require(k <= n, "rank exceeds dimension");
    require(strictly_increasing(enc.row_indices, n), "row indices not strictly increasing in [0,n)");
    require(strictly_increasing(enc.col_indices, n), "column indices not strictly increasing in [0,n)");
    for (const auto& v : enc.rows) require(v.size() == n, "stored row has wrong length");
    for (const auto& v : enc.columns) require(v.size() == n, "stored column has wrong length");
    for (const auto& v : enc.rows)
        for (std::uint32_t e : v) require(e < f.order(), "row entry out of field range");
    for (const auto& v : enc.columns)
        for (std::uint32_t e : v) require(e < f.order(), "column entry out of field range");

    if (k == 0) return Matrix(n, n, f);

    const Matrix row_mat = pack_vectors(enc.rows, f, /*as_rows=*/true);
    const Matrix col_mat = pack_vectors(enc.columns, f, /*as_rows=*/false);
    require(row_mat.rank() == k, "stored rows are linearly dependent");
    require(col_mat.rank() == k, "stored columns are linearly dependent");

    // Intersection submatrix: entry (t,u) is visible from both the stored row
    // i_t and the stored column j_u; the two views must agree.
    Matrix inter(k, k, f);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t u = 0; u < k; ++u) {
            const std::uint32_t from_row = enc.rows[t][enc.col_indices[u]];
            const std::uint32_t from_col = enc.columns[u][enc.row_indices[t]];
            require(from_row == from_col, "row/column overlap entries disagree");
            inter(t, u) = from_row;
        }
    require(inter.rank() == k, "intersection submatrix is singular");

    Matrix out(n, n, f);
    std::vector<bool> is_basis_col(n, false);
    for (std::size_t u = 0; u < k; ++u) {
        is_basis_col[enc.col_indices[u]] = true;
        for (std::size_t i = 0; i < n; ++i) out(i, enc.col_indices[u]) = enc.columns[u][i];
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (is_basis_col[j]) continue;
        std::vector<std::uint32_t> rhs(k);
        for (std::size_t t = 0; t < k; ++t) rhs[t] = enc.rows[t][j];
        const auto alpha = inter.solve(rhs);
        require(alpha.has_value(), "intersection system inconsistent");
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t v = 0;
            for (std::size_t u = 0; u < k; ++u)
                v = f.add(v, f.mul((*alpha)[u], enc.columns[u][i]));
            out(i, j) = v;
        }
    }
    return out;
}

std::uint64_t sparse_base_count_bound(std::size_t n, std::uint32_t q, std::size_t s) {
    const std::uint64_t base = static_cast<std::uint64_t>(n) * q;
    std::uint64_t acc = 1;
    for (std::size_t e = 0; e < 6 * s; ++e) {
        if (acc > UINT64_MAX / base) return UINT64_MAX;
        acc *= base;
    }
    return acc;
}

namespace {

// Does the matrix contain k independent rows (columns via transpose) whose
// total nonzero count is at most s?
bool has_sparse_basis(const Matrix& m, std::size_t k, std::size_t s) {
    const std::size_t n = m.rows();
    if (k == 0) return true;
    std::vector<std::size_t> chosen;
    // enumerate k-subsets of [n] by bitmask; n is tiny here
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        chosen.clear();
        std::size_t nnz = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                chosen.push_back(i);
                for (std::size_t j = 0; j < n; ++j)
                    if (m(i, j) != 0) ++nnz;
            }
        if (nnz > s) continue;
        std::vector<std::size_t> all_cols(n);
        std::iota(all_cols.begin(), all_cols.end(), 0);
        if (m.submatrix(chosen, all_cols).rank() == k) return true;
    }
    return false;
}

}  // namespace

std::uint64_t count_rank_k_sparse_base_matrices(std::size_t n, std::size_t k, std::size_t s,
                                                Field field, std::uint64_t max_matrices) {
    const std::uint32_t q = field.order();
    long double total_ld = 1;
    for (std::size_t e = 0; e < n * n; ++e) total_ld *= q;
    if (total_ld > static_cast<long double>(max_matrices))
        throw BudgetExceededError(
            "enumeration of q^(n^2) matrices exceeds budget (n=" + std::to_string(n) +
                ", q=" + std::to_string(q) + ")",
            static_cast<std::uint64_t>(std::min<long double>(total_ld, 1e18L)));

    const std::uint64_t total = static_cast<std::uint64_t>(total_ld);
    std::uint64_t count = 0;
    std::vector<std::uint32_t> digits(n * n, 0);
    Matrix m(n, n, field);
    for (std::uint64_t it = 0; it < total; ++it) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = digits[i * n + j];
        if (m.rank() == k && has_sparse_basis(m, k, s) && has_sparse_basis(m.transpose(), k, s))
            ++count;
        // next matrix (odometer in base q)
        for (std::size_t d = 0; d < digits.size(); ++d) {
            if (++digits[d] < q) break;
            digits[d] = 0;
        }
    }
    return count;
}

}  // namespace minrank

#include "minrank/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minrank {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {
    if ((rows == 0) != (cols == 0))
        throw std::invalid_argument("only the 0x0 matrix may have a zero dimension");
}

Matrix::Matrix(Field field, std::initializer_list<std::initializer_list<std::uint32_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), field_(field) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (std::uint32_t v : r) {
            if (v >= field_.order()) throw FieldError("entry out of range for field");
            data_.push_back(v);
        }
    }
}

Matrix Matrix::identity(std::size_t n, Field field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::uint32_t Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    return (*this)(i, j);
}

void Matrix::set(std::size_t i, std::size_t j, std::uint32_t v) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    if (v >= field_.order()) throw FieldError("entry out of range for field");
    (*this)(i, j) = v;
}

std::vector<std::uint32_t> Matrix::column(std::size_t j) const {
    std::vector<std::uint32_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

namespace detail {

std::size_t rank_generic(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::uint32_t> a(nr * nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i * nc + j] = m(i, j);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot * nc + col] == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < nc; ++j) std::swap(a[pivot * nc + j], a[rank * nc + j]);
        const std::uint32_t pinv = f.inv(a[rank * nc + col]);
        for (std::size_t j = col; j < nc; ++j) a[rank * nc + j] = f.mul(a[rank * nc + j], pinv);
        for (std::size_t i = rank + 1; i < nr; ++i) {
            const std::uint32_t factor = a[i * nc + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < nc; ++j)
                a[i * nc + j] = f.sub(a[i * nc + j], f.mul(factor, a[rank * nc + j]));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_f2_rows(std::vector<std::uint64_t>& rows) {
    std::size_t rank = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::uint64_t v = rows[i];
        if (v == 0) continue;
        ++rank;
        const std::uint64_t low = v & (~v + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= v;
    }
    return rank;
}

std::size_t rank_f2(const Matrix& m) {
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j)) w |= std::uint64_t{1} << j;
        rows[i] = w;
    }
    return rank_f2_rows(rows);
}

}  // namespace detail

std::size_t Matrix::rank() const {
    if (rows_ == 0) return 0;
    if (field_.order() == 2 && cols_ <= 64) return detail::rank_f2(*this);
    return detail::rank_generic(*this);
}

std::optional<std::vector<std::uint32_t>> Matrix::solve(std::span<const std::uint32_t> b) const {
    if (b.size() != rows_)
        throw std::invalid_argument("solve: rhs length " + std::to_string(b.size()) +
                                    " != rows " + std::to_string(rows_));
    const std::size_t nr = rows_, nc = cols_;
    const std::size_t w = nc + 1;  // augmented
    std::vector<std::uint32_t> a(nr * w);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a[i * w + j] = (*this)(i, j);
        a[i * w + nc] = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t pivot = rank;
        while (pivot < nr && a[pivot * w + col] == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < w; ++j) std::swap(a[pivot * w + j], a[rank * w + j]);
        const std::uint32_t pinv = field_.inv(a[rank * w + col]);
        for (std::size_t j = col; j < w; ++j) a[rank * w + j] = field_.mul(a[rank * w + j], pinv);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == rank) continue;
            const std::uint32_t factor = a[i * w + col];
            if (factor == 0) continue;
            for (std::size_t j = col; j < w; ++j)
                a[i * w + j] = field_.sub(a[i * w + j], field_.mul(factor, a[rank * w + j]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < nr; ++i)
        if (a[i * w + nc] != 0) return std::nullopt;

    std::vector<std::uint32_t> x(nc, 0);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = a[r * w + nc];
    return x;
}

std::size_t Matrix::sparsity() const noexcept {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(),
                                                  [](std::uint32_t v) { return v != 0; }));
}

std::size_t Matrix::index_sparsity(std::size_t i) const {
    if (rows_ != cols_) throw std::invalid_argument("index_sparsity requires a square matrix");
    if (i >= rows_) throw std::out_of_range("index_sparsity: index out of range");
    std::size_t s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j) != 0) ++s;
        if ((*this)(j, i) != 0) ++s;
    }
    return s;  // the diagonal entry, if nonzero, was counted in both passes
}

namespace {

// Incremental echelon basis used by the greedy basis scans.
class EchelonBasis {
public:
    explicit EchelonBasis(const Field& f) : field_(f) {}

    // Tries to insert v; returns true (and keeps it) if independent of the
    // vectors inserted so far.
    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t t = 0; t < vecs_.size(); ++t) {
            const std::uint32_t c = v[pivots_[t]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < v.size(); ++j)
                v[j] = field_.sub(v[j], field_.mul(c, vecs_[t][j]));
        }
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return false;
        const std::uint32_t pinv = field_.inv(v[p]);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = field_.mul(v[j], pinv);
        pivots_.push_back(p);
        vecs_.push_back(std::move(v));
        return true;
    }

private:
    Field field_;
    std::vector<std::vector<std::uint32_t>> vecs_;
    std::vector<std::size_t> pivots_;
};

void check_permutation(std::span<const std::size_t> order, std::size_t n) {
    if (order.size() != n) throw std::invalid_argument("order is not a permutation: wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
    }
}

}  // namespace

std::vector<std::size_t> Matrix::greedy_column_basis(std::span<const std::size_t> order) const {
    check_permutation(order, cols_);
    EchelonBasis basis(field_);
    std::vector<std::size_t> kept;
    for (std::size_t j : order)
        if (basis.insert(column(j))) kept.push_back(j);
    return kept;
}

std::vector<std::size_t> Matrix::greedy_row_basis(std::span<const std::size_t> order) const {
    check_permutation(order, rows_);
    EchelonBasis basis(field_);
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        auto r = row(i);
        if (basis.insert(std::vector<std::uint32_t>(r.begin(), r.end()))) kept.push_back(i);
    }
    return kept;
}

Matrix Matrix::principal_submatrix(std::span<const std::size_t> indices) const {
    if (rows_ != cols_) throw std::invalid_argument("principal_submatrix requires a square matrix");
    return submatrix(indices, indices);
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) const {
    for (std::size_t i : row_idx)
        if (i >= rows_) throw std::out_of_range("submatrix: row index out of range");
    for (std::size_t j : col_idx)
        if (j >= cols_) throw std::out_of_range("submatrix: column index out of range");
    Matrix out(row_idx.size(), col_idx.size(), field_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out(i, j) = (*this)(row_idx[i], col_idx[j]);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (field_ != rhs.field_) throw FieldError("matrix product: field mismatch");
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            const std::uint32_t v = (*this)(i, l);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = field_.add(out(i, j), field_.mul(v, rhs(l, j)));
        }
    return out;
}

std::vector<std::uint32_t> Matrix::apply(std::span<const std::uint32_t> x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<std::uint32_t> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
    return y;
}

}  // namespace minrank

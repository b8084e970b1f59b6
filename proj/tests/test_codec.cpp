#include <doctest.h>

#include <cmath>
#include <random>

#include "minrank/codec.hpp"
#include "minrank/experiments.hpp"

using namespace minrank;

namespace {

Matrix all_ones(std::size_t n, Field f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
    return m;
}

}  // namespace

TEST_CASE("encode picks natural-order greedy bases") {
    SUBCASE("identity keeps everything") {
        const auto enc = encode(Matrix::identity(3, Field(2)));
        CHECK(enc.rank() == 3);
        CHECK(enc.row_indices == std::vector<std::size_t>{0, 1, 2});
        CHECK(enc.col_indices == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("rank-1 all-ones keeps the first row and column") {
        const auto enc = encode(all_ones(4, Field(2)));
        CHECK(enc.rank() == 1);
        CHECK(enc.row_indices == std::vector<std::size_t>{0});
        CHECK(enc.col_indices == std::vector<std::size_t>{0});
    }
    SUBCASE("random rank-2 matrix has an invertible intersection") {
        std::mt19937_64 rng(21);
        Matrix m = random_low_rank_matrix(5, 2, Field(3), rng);
        while (m.rank() != 2) m = random_low_rank_matrix(5, 2, Field(3), rng);
        const auto enc = encode(m);
        CHECK(enc.rank() == 2);
        CHECK(m.submatrix(enc.row_indices, enc.col_indices).rank() == 2);
    }
}

TEST_CASE("decode round trip") {
    CHECK(decode(encode(Matrix::identity(3, Field(3)))) == Matrix::identity(3, Field(3)));
    CHECK(decode(encode(all_ones(4, Field(2)))) == all_ones(4, Field(2)));
    CHECK(decode(encode(Matrix(4, 4, Field(5)))) == Matrix(4, 4, Field(5)));  // rank 0
}

TEST_CASE("round trip on random low-rank products") {
    std::mt19937_64 rng(20260823);
    const std::uint32_t qs[] = {2, 3, 5};
    for (std::size_t trial = 0; trial < 300; ++trial) {
        const Field f(qs[trial % 3]);
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = rng() % (n + 1);
        const Matrix m = random_low_rank_matrix(n, k, f, rng);
        const auto enc = encode(m);
        CHECK(enc.rank() == m.rank());
        CHECK(decode(enc) == m);
        // encoding length in field-element-equivalent units
        const double index_units = std::ceil(std::log(static_cast<double>(std::max<std::size_t>(n, 2))) /
                                             std::log(static_cast<double>(f.order())));
        CHECK(static_cast<double>(2 * enc.rank() * n) + 2 * enc.rank() * index_units >=
              static_cast<double>(2 * enc.rank() * n));
        CHECK(enc.rows.size() + enc.columns.size() == 2 * enc.rank());
    }
}

TEST_CASE("decode rejects malformed encodings") {
    const Field f2(2);
    const Matrix m(f2, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto good = encode(m);
    REQUIRE(decode(good) == m);

    SUBCASE("non-increasing indices") {
        auto bad = good;
        std::swap(bad.row_indices[0], bad.row_indices[1]);
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
    SUBCASE("dependent rows") {
        auto bad = good;
        bad.rows[1] = bad.rows[0];
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
    SUBCASE("inconsistent row/column overlap") {
        auto bad = good;
        bad.columns[0][bad.row_indices[0]] ^= 1;
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
    SUBCASE("size mismatch") {
        auto bad = good;
        bad.columns.pop_back();
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
    SUBCASE("entry outside the field") {
        auto bad = good;
        bad.rows[0][2] = 7;
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
    SUBCASE("singular intersection") {
        // claim rows {0} and columns {2} of a matrix whose (0,2) entry is 0
        BasisEncoding bad{3, f2, {0}, {2}, {{1, 1, 0}}, {{0, 0, 1}}};
        CHECK_THROWS_AS(decode(bad), MalformedEncodingError);
    }
}

TEST_CASE("counting oracle at tiny scale") {
    const Field f2(2);
    CHECK(count_rank_k_sparse_base_matrices(1, 1, 1, f2) == 1);
    // only the two permutation matrices admit 2-sparse bases at full rank
    CHECK(count_rank_k_sparse_base_matrices(2, 2, 2, f2) == 2);
    CHECK(count_rank_k_sparse_base_matrices(2, 1, 1, f2) == 4);
    CHECK(count_rank_k_sparse_base_matrices(2, 1, 2, f2) == 9);
    // s = n^2 puts no sparsity constraint: all of GL_3(F2)
    CHECK(count_rank_k_sparse_base_matrices(3, 3, 9, f2) == 168);
}

TEST_CASE("counting oracle refuses out-of-budget enumerations") {
    CHECK_THROWS_AS(count_rank_k_sparse_base_matrices(3, 1, 1, Field(2), 100),
                    BudgetExceededError);
    try {
        count_rank_k_sparse_base_matrices(4, 1, 1, Field(5), 1u << 20);
        FAIL("expected BudgetExceededError");
    } catch (const BudgetExceededError& e) {
        CHECK(e.required_budget > (1u << 20));
    }
}

TEST_CASE("counts never exceed the (nq)^(6s) bound") {
    const Field f2(2);
    for (std::size_t n = 1; n <= 2; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t s = 0; s <= n * n; ++s)
                CHECK(count_rank_k_sparse_base_matrices(n, k, s, f2) <=
                      sparse_base_count_bound(n, 2, s));
}

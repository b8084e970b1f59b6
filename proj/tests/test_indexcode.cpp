#include <doctest.h>

#include <random>

#include "minrank/bounds.hpp"
#include "minrank/experiments.hpp"
#include "minrank/indexcode.hpp"

using namespace minrank;

namespace {

std::map<std::size_t, std::uint32_t> side_for(const LinearIndexCode& code, std::size_t i,
                                              const std::vector<std::uint32_t>& x) {
    std::map<std::size_t, std::uint32_t> side;
    for (std::size_t j : code.side_information_indices(i)) side[j] = x[j];
    return side;
}

}  // namespace

TEST_CASE("complete graph broadcasts a single sum") {
    const Field f2(2);
    Matrix ones(3, 3, f2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) ones(i, j) = 1;
    const auto code = build_code(DiGraph::complete(3), ones);
    CHECK(code.broadcast_length() == 1);

    const std::vector<std::uint32_t> x{1, 1, 0};
    const auto y = code.broadcast(x);
    REQUIRE(y.size() == 1);
    CHECK(y[0] == 0);  // 1 + 1 + 0 over F2
    CHECK(code.decode_symbol(0, y, side_for(code, 0, x)) == 1);
    CHECK(code.decode_symbol(2, y, side_for(code, 2, x)) == 0);
}

TEST_CASE("identity matrix gives the trivial send-everything code") {
    const Field f5(5);
    const DiGraph g(4);  // no side information at all
    const auto code = build_code(g, Matrix::identity(4, f5));
    CHECK(code.broadcast_length() == 4);
    const std::vector<std::uint32_t> x{3, 0, 4, 1};
    const auto y = code.broadcast(x);
    CHECK(y == x);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(code.decode_symbol(i, y, {}) == x[i]);
}

TEST_CASE("build_code rejects non-representing matrices") {
    CHECK_THROWS_AS(build_code(DiGraph(3), Matrix(3, 3, Field(2))), std::invalid_argument);
    // off-diagonal nonzero without a matching arc
    Matrix m = Matrix::identity(3, Field(2));
    m(0, 1) = 1;
    CHECK_THROWS_AS(build_code(DiGraph(3), m), std::invalid_argument);
    // size mismatch
    CHECK_THROWS_AS(build_code(DiGraph(4), Matrix::identity(3, Field(2))), std::invalid_argument);
}

TEST_CASE("broadcast is linear") {
    const DiGraph g = DiGraph::sample_gnp(10, 0.5, 2);
    const auto cover = clique_cover_upper_bound(g, Field(7));
    const auto code = build_code(g, cover.witness);
    const Field f = code.field();

    std::mt19937_64 rng(5);
    std::vector<std::uint32_t> a(10), b(10), sum(10);
    for (std::size_t i = 0; i < 10; ++i) {
        a[i] = static_cast<std::uint32_t>(rng() % 7);
        b[i] = static_cast<std::uint32_t>(rng() % 7);
        sum[i] = f.add(a[i], b[i]);
    }
    const auto ya = code.broadcast(a), yb = code.broadcast(b), ys = code.broadcast(sum);
    for (std::size_t r = 0; r < ys.size(); ++r) CHECK(ys[r] == f.add(ya[r], yb[r]));
}

TEST_CASE("decode_symbol polices the side-information keys") {
    const auto code = build_code(DiGraph::complete(3), [] {
        Matrix m(3, 3, Field(2));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = 1;
        return m;
    }());
    const std::vector<std::uint32_t> x{1, 0, 1};
    const auto y = code.broadcast(x);

    auto side = side_for(code, 0, x);
    CHECK(code.decode_symbol(0, y, side) == 1);

    auto missing = side;
    missing.erase(missing.begin());
    CHECK_THROWS_AS(code.decode_symbol(0, y, missing), std::invalid_argument);

    auto extraneous = side;
    extraneous[0] = x[0];  // receiver 0 must not see its own symbol
    CHECK_THROWS_AS(code.decode_symbol(0, y, extraneous), std::invalid_argument);
}

TEST_CASE("end-to-end decoding on random graphs") {
    std::mt19937_64 rng(606);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DiGraph g = DiGraph::sample_gnp(16, 0.5, seed);
        const Field f(seed % 2 == 0 ? 2 : 3);
        const auto cover = clique_cover_upper_bound(g, f);
        const auto code = build_code(g, cover.witness);
        CHECK(code.broadcast_length() == cover.colors);

        for (std::size_t msg = 0; msg < 20; ++msg) {
            std::vector<std::uint32_t> x(16);
            for (auto& v : x) v = static_cast<std::uint32_t>(rng() % f.order());
            const auto y = code.broadcast(x);
            for (std::size_t i = 0; i < 16; ++i)
                CHECK(code.decode_symbol(i, y, side_for(code, i, x)) == x[i]);
        }
    }
}

TEST_CASE("an exact witness yields a code of optimal length") {
    const DiGraph g = DiGraph::sample_gnp(6, 0.5, 8);
    const auto exact = exact_minrank(g, Field(2));
    const auto code = build_code(g, exact.witness);
    CHECK(code.broadcast_length() == exact.rank);

    std::mt19937_64 rng(9);
    for (std::size_t msg = 0; msg < 50; ++msg) {
        std::vector<std::uint32_t> x(6);
        for (auto& v : x) v = static_cast<std::uint32_t>(rng() % 2);
        const auto y = code.broadcast(x);
        for (std::size_t i = 0; i < 6; ++i)
            CHECK(code.decode_symbol(i, y, side_for(code, i, x)) == x[i]);
    }
}

#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "minrank/experiments.hpp"

using namespace minrank;

TEST_CASE("trial seed derivation") {
    CHECK(derive_trial_seed(42, 16, 0.5, 0) == derive_trial_seed(42, 16, 0.5, 0));

    std::set<std::uint64_t> seen;
    for (std::uint64_t trial = 0; trial < 100; ++trial)
        seen.insert(derive_trial_seed(42, 16, 0.5, trial));
    CHECK(seen.size() == 100);

    CHECK(derive_trial_seed(42, 16, 0.5, 0) != derive_trial_seed(42, 17, 0.5, 0));
    CHECK(derive_trial_seed(42, 16, 0.5, 0) != derive_trial_seed(42, 16, 0.25, 0));
    CHECK(derive_trial_seed(42, 16, 0.5, 0) != derive_trial_seed(43, 16, 0.5, 0));
}

TEST_CASE("scaling runs are byte-deterministic") {
    ScalingOptions opts;
    opts.n_list = {8, 16};
    opts.p = 0.5;
    opts.trials = 3;
    opts.seed = 7;

    std::stringstream a, b;
    write_scaling_csv(a, run_scaling(opts), opts.with_times);
    write_scaling_csv(b, run_scaling(opts), opts.with_times);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("n,p,seed,trial,arcs,lower_sparsity,lower_indset,upper_clique_cover,exact\n", 0) == 0);

    // adding trials must not perturb the rows already produced
    ScalingOptions more = opts;
    more.trials = 5;
    const auto rows3 = run_scaling(opts);
    const auto rows5 = run_scaling(more);
    for (std::size_t i = 0; i < rows3.size(); ++i) {
        const auto& r3 = rows3[i];
        bool found = false;
        for (const auto& r5 : rows5)
            if (r5.n == r3.n && r5.trial == r3.trial) {
                CHECK(r5.seed == r3.seed);
                CHECK(r5.arcs == r3.arcs);
                CHECK(r5.upper_clique_cover == r3.upper_clique_cover);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("scaling validates its inputs") {
    ScalingOptions opts;
    opts.n_list = {8};
    opts.p = 1.5;
    CHECK_THROWS_AS(run_scaling(opts), std::invalid_argument);
}

TEST_CASE("time columns only appear when asked for") {
    ScalingOptions opts;
    opts.n_list = {8};
    opts.trials = 1;
    std::stringstream plain, timed;
    write_scaling_csv(plain, run_scaling(opts), false);
    opts.with_times = true;
    write_scaling_csv(timed, run_scaling(opts), true);
    CHECK(plain.str().find("t_") == std::string::npos);
    CHECK(timed.str().find("t_sparsity") != std::string::npos);
}

TEST_CASE("concentration") {
    SUBCASE("p = 0 has zero spread") {
        const auto rep = run_concentration(16, 0.0, 10, 1);
        CHECK(rep.stddev == 0.0);
        CHECK_FALSE(rep.gross_violation);
        CHECK(rep.per_trial_upper == std::vector<std::size_t>(10, 16));
    }
    SUBCASE("sparse and dense regimes both stay within the gate") {
        for (double p : {0.1, 0.9}) {
            const auto rep = run_concentration(64, p, 30, 99);
            CHECK(rep.trials == 30);
            CHECK(rep.stddev <= 3.0 * std::sqrt(63.0));
            CHECK_FALSE(rep.gross_violation);
            CHECK(rep.normalized == doctest::Approx(rep.stddev / std::sqrt(63.0)));
        }
    }
    SUBCASE("needs at least two trials") {
        CHECK_THROWS_AS(run_concentration(16, 0.5, 1, 0), std::invalid_argument);
    }
    SUBCASE("csv shape") {
        std::stringstream out;
        write_concentration_csv(out, run_concentration(16, 0.5, 5, 3));
        CHECK(out.str().rfind("key,value\n", 0) == 0);
        CHECK(out.str().find("std,") != std::string::npos);
        CHECK(out.str().find("gross_violation,0") != std::string::npos);
    }
}

TEST_CASE("shift scan") {
    SUBCASE("empty graph is shift invariant") {
        const auto res = run_shift_scan(DiGraph(6), Field(2));
        CHECK(res.rows.size() == 6);
        for (const auto& row : res.rows) {
            CHECK(row.arcs == 0);
            CHECK(row.dropped == 0);
            CHECK(row.upper_clique_cover == 6);
        }
        CHECK(res.max_lower == 6);
        CHECK(res.min_upper == 6);
    }
    SUBCASE("complete graph drops one arc per vertex at nonzero shifts") {
        const auto res = run_shift_scan(DiGraph::complete(5), Field(2));
        CHECK(res.rows[0].dropped == 0);
        for (std::size_t s = 1; s < 5; ++s) CHECK(res.rows[s].dropped == 5);
        CHECK(res.min_upper <= res.rows[0].upper_clique_cover);
    }
    SUBCASE("csv shape") {
        std::stringstream out;
        write_shift_csv(out, run_shift_scan(DiGraph(3), Field(2)));
        CHECK(out.str().rfind("shift,arcs,dropped,lower_sparsity,lower_indset,upper_clique_cover,exact\n", 0) == 0);
    }
}

TEST_CASE("verify suite dispatch") {
    std::stringstream sink;
    CHECK_THROWS_AS(run_verify("no-such-suite", 0, sink), std::invalid_argument);
    CHECK(verify_suite_names().size() == 7);

    CHECK(run_verify("product-bound", 1, sink));
}

TEST_CASE("counting table at n = 2") {
    std::stringstream out;
    CHECK(corollary32_table(2, Field(2), out));
    CHECK(out.str().rfind("n,k,s,count,bound\n", 0) == 0);
    // frozen row: 2x2 rank-1 matrices with 1-sparse bases
    CHECK(out.str().find("2,1,1,4,") != std::string::npos);
}

TEST_CASE("random matrix helpers") {
    std::mt19937_64 rng(1);
    const Matrix m = random_matrix_nonzero_diagonal(10, Field(3), rng);
    for (std::size_t i = 0; i < 10; ++i) CHECK(m(i, i) != 0);

    for (std::size_t trial = 0; trial < 50; ++trial) {
        const std::size_t k = trial % 6;
        CHECK(random_low_rank_matrix(8, k, Field(5), rng).rank() <= k);
    }
}

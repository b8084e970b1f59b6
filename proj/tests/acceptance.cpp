// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every check is deterministic; the graph sampler and the per-trial
// seed derivation are fixed by contract.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "minrank/bounds.hpp"
#include "minrank/experiments.hpp"

using namespace minrank;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << ": criterion " << id << " - " << what << '\n';
    if (!ok) ++failures;
}

bool run_suite(const char* name) {
    std::ostringstream log;
    const bool ok = run_verify(name, 42, log);
    if (!ok) std::cout << log.str();
    return ok;
}

// ---- criterion 7: sparse-regime lower bound ----
bool sparse_regime_bound() {
    double total = 0;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const std::uint64_t s = derive_trial_seed(42, 2000, 4.0 / 2000.0, trial);
        const DiGraph g = DiGraph::sample_gnp(2000, 4.0 / 2000.0, s);
        total += static_cast<double>(sparsity_lower_bound(g));
    }
    const double mean = total / 10.0;
    std::cout << "  mean sparsity lower bound at G(2000, 4/2000): " << mean << '\n';
    return mean >= 80.0;
}

// ---- criterion 8: dense-regime clique-cover rate ----
// Calibration (seed 42, 10 trials): ratios 2.0945 (n=128), 2.1000 (n=256),
// 2.1041 (n=512). The frozen band is [1.9, 2.3], inside the required
// [0.4, 2.5] envelope. The monotonicity clause is checked as stated even
// though the calibration run already shows the trial means rising slightly
// through this range of n.
bool dense_regime_rate() {
    ScalingOptions opts;
    opts.n_list = {128, 256, 512};
    opts.p = 0.5;
    opts.trials = 10;
    opts.seed = 42;
    opts.bounds.attempt_exact = false;
    const auto rows = run_scaling(opts);

    std::vector<double> means;
    bool in_band = true;
    for (std::size_t n : opts.n_list) {
        double total = 0;
        std::size_t count = 0;
        for (const auto& row : rows)
            if (row.n == n) {
                total += static_cast<double>(row.upper_clique_cover);
                ++count;
            }
        const double rate = static_cast<double>(n) / std::log2(static_cast<double>(n));
        const double mean_ratio = total / static_cast<double>(count) / rate;
        means.push_back(mean_ratio);
        std::cout << "  n=" << n << " mean upper/(n/log2 n) = " << mean_ratio << '\n';
        if (mean_ratio < 1.9 || mean_ratio > 2.3) in_band = false;
    }
    bool non_increasing = true;
    for (std::size_t i = 1; i < means.size(); ++i)
        if (means[i] > means[i - 1]) non_increasing = false;
    if (!non_increasing)
        std::cout << "  trial means are not non-increasing in n (see calibration note)\n";
    return in_band && non_increasing;
}

// ---- criterion 9: concentration ----
bool concentration_gate() {
    const auto rep = run_concentration(256, 0.5, 50, 42);
    std::cout << "  std " << rep.stddev << " vs gate " << 3.0 * std::sqrt(255.0) << '\n';
    return rep.stddev <= 3.0 * std::sqrt(255.0) && !rep.gross_violation;
}

// ---- criterion 10: CLI byte determinism ----
bool files_identical(const std::filesystem::path& a, const std::filesystem::path& b) {
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    if (!fa || !fb) return false;
    std::ostringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    return sa.str() == sb.str() && !sa.str().empty();
}

bool cli_determinism() {
#ifndef MINRANK_CLI_PATH
    std::cout << "  CLI path not configured\n";
    return false;
#else
    namespace fs = std::filesystem;
    const std::string cli = MINRANK_CLI_PATH;
    const fs::path dir = fs::temp_directory_path() / "minrank-acceptance";
    fs::create_directories(dir);

    const fs::path graph = dir / "g.el";
    const fs::path small = dir / "small.el";
    {
        const std::string cmd = cli + " sample --n 30 --p 0.4 --seed 7 --graph-out " +
                                graph.string();
        if (std::system(cmd.c_str()) != 0) return false;
        const std::string cmd2 = cli + " sample --n 5 --p 0.5 --seed 3 --graph-out " +
                                 small.string();
        if (std::system(cmd2.c_str()) != 0) return false;
    }

    const std::vector<std::string> invocations = {
        "sample --n 30 --p 0.4 --seed 7 --graph-out",
        "bounds --graph-in " + graph.string() + " --out",
        "exact --graph-in " + small.string() + " --out",
        "simulate --graph-in " + graph.string() + " --trials 5 --seed 3 --out",
        "scaling --n 16,24 --trials 2 --seed 9 --out",
        "concentration --n 24 --trials 5 --seed 11 --out",
        "shifts --graph-in " + small.string() + " --out",
        "verify corollary32 --n 2 --out",
    };

    bool all_ok = true;
    for (std::size_t i = 0; i < invocations.size(); ++i) {
        const fs::path out1 = dir / ("out" + std::to_string(i) + "a");
        const fs::path out2 = dir / ("out" + std::to_string(i) + "b");
        const std::string base = cli + " " + invocations[i] + " ";
        if (std::system((base + out1.string() + " >/dev/null 2>&1").c_str()) != 0 ||
            std::system((base + out2.string() + " >/dev/null 2>&1").c_str()) != 0 ||
            !files_identical(out1, out2)) {
            std::cout << "  nondeterministic or failing: " << invocations[i] << '\n';
            all_ok = false;
        }
    }
    return all_ok;
#endif
}

}  // namespace

int main() {
    report(1, run_suite("sandwich-n4"),
           "exhaustive n=4 bound sandwich and product bound over F2");
    report(2, run_suite("lemma31"), "encode/decode round trip on 1000 random matrices");
    {
        std::ostringstream sink;
        report(3, corollary32_table(3, Field(2), sink),
               "exhaustive sparse-basis counts within the (nq)^(6s) bound, n <= 3");
    }
    report(4, run_suite("lemma33"), "sparsity >= n^2/(4 rank) on 1000 matrices, n = 32");
    report(5, run_suite("lemma34"),
           "sparse-basis principal submatrix postconditions on 1000 matrices");
    report(6, run_suite("indexcode"),
           "160000 index-code decodes over 100 graphs G(16, 1/2), all correct");
    report(7, sparse_regime_bound(), "mean sparsity lower bound >= 80 at G(2000, 4/2000)");
    report(8, dense_regime_rate(),
           "clique-cover rate in frozen band [1.9, 2.3] and non-increasing in n");
    report(9, concentration_gate(),
           "clique-cover std <= 3 sqrt(255) over 50 samples of G(256, 1/2)");
    report(10, cli_determinism(), "byte-identical output on repeated CLI runs");

    std::cout << (failures == 0 ? "all criteria passed" :
                  std::to_string(failures) + " criteria failed") << '\n';
    return failures;
}

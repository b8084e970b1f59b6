#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "minrank/bounds.hpp"
#include "minrank/graph.hpp"

namespace minrank {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Per-trial seed: seed XOR splitmix64-hash of (n, bit pattern of p, trial).
/// Adding trials never perturbs earlier ones.
std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t n, double p,
                                std::uint64_t trial) noexcept;

struct ScalingRow {
    std::size_t n = 0;
    double p = 0;
    std::uint64_t seed = 0;  // the derived per-trial seed
    std::size_t trial = 0;
    std::size_t arcs = 0;
    std::size_t lower_sparsity = 0;
    std::size_t lower_indset = 0;
    std::size_t upper_clique_cover = 0;
    std::optional<std::size_t> exact;
    double t_sparsity = 0, t_indset = 0, t_cover = 0, t_exact = 0;  // seconds
};

struct ScalingOptions {
    std::vector<std::size_t> n_list;
    double p = 0.5;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    Field field = Field(2);
    BoundsOptions bounds;
    /// Wall-time columns are nondeterministic, so they are off by default and
    /// excluded from the byte-determinism contract.
    bool with_times = false;
};

std::vector<ScalingRow> run_scaling(const ScalingOptions& opts);
void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows, bool with_times);

struct ConcentrationReport {
    std::size_t n = 0;
    double p = 0;
    std::size_t trials = 0;
    std::vector<std::size_t> per_trial_upper;
    double mean = 0;
    double stddev = 0;
    double normalized = 0;       // stddev / sqrt(n - 1)
    bool gross_violation = false;  // stddev > 3 sqrt(n-1) would contradict sub-Gaussian behavior
};

ConcentrationReport run_concentration(std::size_t n, double p, std::size_t trials,
                                      std::uint64_t seed, Field field = Field(2));
void write_concentration_csv(std::ostream& out, const ConcentrationReport& report);

struct ShiftRow {
    std::size_t shift = 0;
    std::size_t arcs = 0;
    std::size_t dropped = 0;  // arcs removed by the no-self-loop policy
    std::size_t lower_sparsity = 0;
    std::size_t lower_indset = 0;
    std::size_t upper_clique_cover = 0;
    std::optional<std::size_t> exact;
};

struct ShiftScanResult {
    std::vector<ShiftRow> rows;
    std::size_t max_lower = 0;  // max over shifts of the best lower bound
    std::size_t min_upper = 0;  // min over shifts of the upper bound
};

ShiftScanResult run_shift_scan(const DiGraph& g, Field field, const BoundsOptions& opts = {});
void write_shift_csv(std::ostream& out, const ShiftScanResult& result);

/// Named property suites (lemma31, corollary32, lemma33, lemma34,
/// product-bound, sandwich-n4, indexcode). Returns true on pass; violations
/// are reported to `out` with a minimal counterexample. Unknown names throw
/// std::invalid_argument.
bool run_verify(const std::string& suite, std::uint64_t seed, std::ostream& out);
const std::vector<std::string>& verify_suite_names();

/// Exhaustive |M_{n,k,s}| table (CSV: n,k,s,count,bound) for all n <= max_n,
/// all k, all s. Returns false if any count exceeds the (n q)^(6s) bound.
bool corollary32_table(std::size_t max_n, Field field, std::ostream& out);

// Deterministic random inputs for the property suites and tests.
Matrix random_matrix(std::size_t rows, std::size_t cols, Field field, std::mt19937_64& rng);
Matrix random_matrix_nonzero_diagonal(std::size_t n, Field field, std::mt19937_64& rng);
/// A product of random n x k and k x n factors; rank is at most k.
Matrix random_low_rank_matrix(std::size_t n, std::size_t k, Field field, std::mt19937_64& rng);

}  // namespace minrank

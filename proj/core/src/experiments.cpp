#include "minrank/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ostream>
#include <stdexcept>

#include "minrank/codec.hpp"
#include "minrank/indexcode.hpp"

namespace minrank {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t n, double p,
                                std::uint64_t trial) noexcept {
    std::uint64_t pbits = 0;
    static_assert(sizeof(pbits) == sizeof(p));
    std::memcpy(&pbits, &p, sizeof(pbits));
    return seed ^ splitmix64(splitmix64(splitmix64(n) ^ pbits) ^ trial);
}

namespace {

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<ScalingRow> run_scaling(const ScalingOptions& opts) {
    if (!(opts.p > 0.0 && opts.p < 1.0)) throw std::invalid_argument("scaling: p must lie in (0,1)");
    if (opts.n_list.empty() || opts.trials == 0)
        throw std::invalid_argument("scaling: need at least one n and one trial");

    std::vector<ScalingRow> rows;
    for (std::size_t n : opts.n_list)
        for (std::size_t trial = 0; trial < opts.trials; ++trial) {
            ScalingRow row;
            row.n = n;
            row.p = opts.p;
            row.trial = trial;
            row.seed = derive_trial_seed(opts.seed, n, opts.p, trial);
            const DiGraph g = DiGraph::sample_gnp(n, opts.p, row.seed);
            row.arcs = g.arc_count();

            auto t0 = std::chrono::steady_clock::now();
            row.lower_sparsity = sparsity_lower_bound(g);
            row.t_sparsity = seconds_since(t0);

            t0 = std::chrono::steady_clock::now();
            row.lower_indset =
                std::max<std::size_t>(independent_set_lower_bound(g, opts.bounds.indset_exact_budget).size, 1);
            row.t_indset = seconds_since(t0);

            t0 = std::chrono::steady_clock::now();
            row.upper_clique_cover =
                clique_cover_upper_bound(g, opts.field, opts.bounds.color_exact_budget).colors;
            row.t_cover = seconds_since(t0);

            if (opts.bounds.attempt_exact &&
                exact_minrank_cost_bits(g, opts.field) <= opts.bounds.exact_budget_bits) {
                t0 = std::chrono::steady_clock::now();
                row.exact = exact_minrank(g, opts.field, opts.bounds.exact_budget_bits).rank;
                row.t_exact = seconds_since(t0);
            }

            if (std::max(row.lower_sparsity, row.lower_indset) > row.upper_clique_cover)
                throw std::logic_error("scaling: lower bound exceeds upper bound, aborting");
            rows.push_back(std::move(row));
        }
    return rows;
}

void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows, bool with_times) {
    out << "n,p,seed,trial,arcs,lower_sparsity,lower_indset,upper_clique_cover,exact";
    if (with_times) out << ",t_sparsity,t_indset,t_cover,t_exact";
    out << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << format_double("%g", r.p) << ',' << r.seed << ',' << r.trial << ','
            << r.arcs << ',' << r.lower_sparsity << ',' << r.lower_indset << ','
            << r.upper_clique_cover << ',';
        if (r.exact) out << *r.exact;
        if (with_times)
            out << ',' << format_double("%.3f", r.t_sparsity) << ','
                << format_double("%.3f", r.t_indset) << ',' << format_double("%.3f", r.t_cover)
                << ',' << format_double("%.3f", r.t_exact);
        out << '\n';
    }
}

ConcentrationReport run_concentration(std::size_t n, double p, std::size_t trials,
                                      std::uint64_t seed, Field field) {
    if (trials < 2) throw std::invalid_argument("concentration: need at least 2 trials");
    ConcentrationReport report;
    report.n = n;
    report.p = p;
    report.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t tseed = derive_trial_seed(seed, n, p, trial);
        const DiGraph g = DiGraph::sample_gnp(n, p, tseed);
        report.per_trial_upper.push_back(clique_cover_upper_bound(g, field).colors);
    }
    double sum = 0;
    for (std::size_t v : report.per_trial_upper) sum += static_cast<double>(v);
    report.mean = sum / static_cast<double>(trials);
    double sq = 0;
    for (std::size_t v : report.per_trial_upper) {
        const double d = static_cast<double>(v) - report.mean;
        sq += d * d;
    }
    report.stddev = std::sqrt(sq / static_cast<double>(trials - 1));
    report.normalized = report.stddev / std::sqrt(static_cast<double>(n - 1));
    report.gross_violation = report.stddev > 3.0 * std::sqrt(static_cast<double>(n - 1));
    return report;
}

void write_concentration_csv(std::ostream& out, const ConcentrationReport& r) {
    out << "key,value\n";
    out << "n," << r.n << '\n';
    out << "p," << format_double("%g", r.p) << '\n';
    out << "trials," << r.trials << '\n';
    for (std::size_t t = 0; t < r.per_trial_upper.size(); ++t)
        out << "upper_" << t << ',' << r.per_trial_upper[t] << '\n';
    out << "mean," << format_double("%.6f", r.mean) << '\n';
    out << "std," << format_double("%.6f", r.stddev) << '\n';
    out << "std_normalized," << format_double("%.6f", r.normalized) << '\n';
    out << "gross_violation," << (r.gross_violation ? 1 : 0) << '\n';
}

ShiftScanResult run_shift_scan(const DiGraph& g, Field field, const BoundsOptions& opts) {
    ShiftScanResult result;
    result.min_upper = SIZE_MAX;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        std::size_t dropped = 0;
        const DiGraph shifted = g.shifted(i, &dropped);
        ShiftRow row;
        row.shift = i;
        row.arcs = shifted.arc_count();
        row.dropped = dropped;
        row.lower_sparsity = sparsity_lower_bound(shifted);
        row.lower_indset =
            std::max<std::size_t>(independent_set_lower_bound(shifted, opts.indset_exact_budget).size, 1);
        row.upper_clique_cover =
            clique_cover_upper_bound(shifted, field, opts.color_exact_budget).colors;
        if (opts.attempt_exact && exact_minrank_cost_bits(shifted, field) <= opts.exact_budget_bits)
            row.exact = exact_minrank(shifted, field, opts.exact_budget_bits).rank;
        result.max_lower =
            std::max(result.max_lower, std::max(row.lower_sparsity, row.lower_indset));
        result.min_upper = std::min(result.min_upper, row.upper_clique_cover);
        result.rows.push_back(std::move(row));
    }
    return result;
}

void write_shift_csv(std::ostream& out, const ShiftScanResult& result) {
    out << "shift,arcs,dropped,lower_sparsity,lower_indset,upper_clique_cover,exact\n";
    for (const auto& r : result.rows) {
        out << r.shift << ',' << r.arcs << ',' << r.dropped << ',' << r.lower_sparsity << ','
            << r.lower_indset << ',' << r.upper_clique_cover << ',';
        if (r.exact) out << *r.exact;
        out << '\n';
    }
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Field field, std::mt19937_64& rng) {
    Matrix m(rows, cols, field);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = static_cast<std::uint32_t>(rng() % field.order());
    return m;
}

Matrix random_matrix_nonzero_diagonal(std::size_t n, Field field, std::mt19937_64& rng) {
    Matrix m = random_matrix(n, n, field, rng);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1 + static_cast<std::uint32_t>(rng() % (field.order() - 1));
    return m;
}

Matrix random_low_rank_matrix(std::size_t n, std::size_t k, Field field, std::mt19937_64& rng) {
    if (k == 0) return Matrix(n, n, field);
    return random_matrix(n, k, field, rng) * random_matrix(k, n, field, rng);
}

// ---------------------------------------------------------------------------
// verification suites

namespace {

bool verify_lemma31(std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    const std::uint32_t fields[] = {2, 3, 5};
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const Field f(fields[trial % 3]);
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = rng() % (n + 1);
        const Matrix m = random_low_rank_matrix(n, k, f, rng);
        const BasisEncoding enc = encode(m);
        bool ok = enc.rank() == m.rank();
        if (ok && enc.rank() > 0) {
            const Matrix inter = m.submatrix(enc.row_indices, enc.col_indices);
            ok = inter.rank() == enc.rank();
        }
        if (ok) ok = decode(enc) == m;
        if (!ok) {
            ++failures;
            out << "lemma31 FAIL: trial " << trial << " n=" << n << " k=" << k
                << " q=" << f.order() << '\n';
        }
    }
    out << "lemma31: 1000 round-trips, " << failures << " failures\n";
    return failures == 0;
}

bool verify_lemma33(std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 32;
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const Field f(trial % 2 == 0 ? 2 : 3);
        const Matrix m = random_matrix_nonzero_diagonal(n, f, rng);
        const std::size_t s = m.sparsity();
        const std::size_t r = m.rank();
        if (4 * s * r < n * n) {
            ++failures;
            out << "lemma33 FAIL: trial " << trial << " q=" << f.order() << " s=" << s
                << " rank=" << r << '\n';
        }
    }
    out << "lemma33: 1000 matrices, " << failures << " violations\n";
    return failures == 0;
}

Matrix adversarial_block_matrix(std::size_t n, Field f, std::mt19937_64& rng) {
    // disjoint all-ones blocks of size ~sqrt(n) with the first ~sqrt(n)
    // columns overwritten by random values
    const std::size_t b = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(n)));
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i / b == j / b) m(i, j) = 1;
    for (std::size_t j = 0; j < b; ++j)
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = static_cast<std::uint32_t>(rng() % f.order());
    return m;
}

bool verify_lemma34(std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    for (std::size_t trial = 0; trial < 1000; ++trial) {
        const Field f(trial % 2 == 0 ? 2 : 3);
        const std::size_t n = 1 + rng() % 64;
        Matrix m(n, n, f);
        switch (trial % 3) {
            case 0:
                m = random_matrix(n, n, f, rng);
                break;
            case 1:  // sparse: expected ~2 nonzeros per row
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (rng() % n < 2) m(i, j) = 1 + static_cast<std::uint32_t>(rng() % (f.order() - 1));
                break;
            case 2:
                m = adversarial_block_matrix(n, f, rng);
                break;
        }
        try {
            const SparseBasisSubmatrix r = sparse_basis_submatrix(m);
            // re-check the postconditions independently of the throwing path
            const std::size_t np = r.sub.rows(), kp = r.sub_rank;
            bool ok = kp * n <= m.rank() * np && r.sub.rank() == kp;
            std::size_t row_nnz = 0, col_nnz = 0;
            for (std::size_t i : r.row_basis)
                for (std::size_t j = 0; j < np; ++j)
                    if (r.sub(i, j)) ++row_nnz;
            for (std::size_t j : r.col_basis)
                for (std::size_t i = 0; i < np; ++i)
                    if (r.sub(i, j)) ++col_nnz;
            const std::size_t cap = 2 * r.sub.sparsity() * kp;
            ok = ok && row_nnz * np <= cap && col_nnz * np <= cap;
            if (!ok) {
                ++failures;
                out << "lemma34 FAIL: trial " << trial << " n=" << n << " family=" << trial % 3
                    << '\n';
            }
        } catch (const std::logic_error& e) {
            ++failures;
            out << "lemma34 FAIL: trial " << trial << " n=" << n << ": " << e.what() << '\n';
        }
    }
    out << "lemma34: 1000 matrices, " << failures << " violations\n";
    return failures == 0;
}

// Arc order of the n=4 exhaustive sweeps: row-major over ordered pairs.
DiGraph graph_from_mask(std::size_t n, std::uint32_t mask) {
    DiGraph g(n);
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (mask & (1u << bit)) g.add_arc(u, v);
            ++bit;
        }
    return g;
}

bool verify_product_bound(std::ostream& out) {
    const Field f2(2);
    std::size_t failures = 0;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        const DiGraph g = graph_from_mask(4, mask);
        if (!product_bound_holds(g, f2)) {
            ++failures;
            out << "product-bound FAIL: n=4 arc mask " << mask << '\n';
        }
    }
    out << "product-bound: 4096 graphs, " << failures << " violations\n";
    return failures == 0;
}

bool coloring_is_proper(const DiGraph& conflict, const std::vector<std::uint32_t>& color) {
    for (std::size_t u = 0; u < conflict.vertex_count(); ++u)
        for (std::size_t v : conflict.out_neighbors(u))
            if (color[u] == color[v]) return false;
    return true;
}

bool verify_sandwich_n4(std::ostream& out) {
    const Field f2(2);
    std::size_t failures = 0;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
        const DiGraph g = graph_from_mask(4, mask);
        const BoundsReport report = compute_bounds(g, f2);
        bool ok = report.exact.has_value();
        if (ok) {
            const std::size_t exact = *report.exact;
            ok = std::max(report.lower_sparsity, report.lower_indset) <= exact &&
                 exact <= report.upper_clique_cover;
            // witnesses
            ok = ok && coloring_is_proper(g.complement().underlying_undirected(), report.cover.coloring);
            ok = ok && is_representing(report.cover.witness, g) &&
                 report.cover.witness.rank() == report.cover.colors;
            ok = ok && is_representing(*report.exact_witness, g) &&
                 report.exact_witness->rank() == exact;
            const DiGraph und = g.underlying_undirected();
            for (std::size_t a = 0; ok && a < report.indset.witness.size(); ++a)
                for (std::size_t b = a + 1; ok && b < report.indset.witness.size(); ++b)
                    if (und.has_arc(report.indset.witness[a], report.indset.witness[b])) ok = false;
            ok = ok && product_bound_holds(g, f2);
        }
        if (!ok) {
            ++failures;
            out << "sandwich-n4 FAIL: arc mask " << mask << '\n';
        }
    }
    out << "sandwich-n4: 4096 graphs, " << failures << " violations\n";
    return failures == 0;
}

bool verify_indexcode(std::uint64_t seed, std::ostream& out) {
    const Field f2(2);
    std::size_t decode_failures = 0, length_failures = 0;
    for (std::size_t gi = 0; gi < 100; ++gi) {
        const std::uint64_t gseed = derive_trial_seed(seed, 16, 0.5, gi);
        const DiGraph g = DiGraph::sample_gnp(16, 0.5, gseed);
        const CliqueCoverResult cover = clique_cover_upper_bound(g, f2);
        const LinearIndexCode code = build_code(g, cover.witness);
        if (code.broadcast_length() != cover.witness.rank()) ++length_failures;
        std::mt19937_64 rng(splitmix64(gseed));
        for (std::size_t t = 0; t < 100; ++t) {
            std::vector<std::uint32_t> x(16);
            for (auto& v : x) v = static_cast<std::uint32_t>(rng() % 2);
            const auto y = code.broadcast(x);
            for (std::size_t i = 0; i < 16; ++i) {
                std::map<std::size_t, std::uint32_t> side;
                for (std::size_t j : code.side_information_indices(i)) side[j] = x[j];
                if (code.decode_symbol(i, y, side) != x[i]) ++decode_failures;
            }
        }
    }
    out << "indexcode: 160000 decodes, " << decode_failures << " wrong symbols, "
        << length_failures << " length mismatches\n";
    return decode_failures == 0 && length_failures == 0;
}

}  // namespace

bool corollary32_table(std::size_t max_n, Field field, std::ostream& out) {
    out << "n,k,s,count,bound\n";
    bool ok = true;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            for (std::size_t s = 0; s <= n * n; ++s) {
                const std::uint64_t count = count_rank_k_sparse_base_matrices(n, k, s, field);
                const std::uint64_t bound = sparse_base_count_bound(n, field.order(), s);
                out << n << ',' << k << ',' << s << ',' << count << ',' << bound << '\n';
                if (count > bound) ok = false;
            }
    return ok;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "lemma31", "corollary32", "lemma33", "lemma34", "product-bound", "sandwich-n4", "indexcode"};
    return names;
}

bool run_verify(const std::string& suite, std::uint64_t seed, std::ostream& out) {
    if (suite == "lemma31") return verify_lemma31(seed, out);
    if (suite == "corollary32") return corollary32_table(3, Field(2), out);
    if (suite == "lemma33") return verify_lemma33(seed, out);
    if (suite == "lemma34") return verify_lemma34(seed, out);
    if (suite == "product-bound") return verify_product_bound(out);
    if (suite == "sandwich-n4") return verify_sandwich_n4(out);
    if (suite == "indexcode") return verify_indexcode(seed, out);
    throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace minrank

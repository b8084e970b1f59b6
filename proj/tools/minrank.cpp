// Command-line harness for minrank bounds, index-code simulation, and the
// random-graph experiments. Every subcommand's output is a pure function of
// its flags and seed (wall-time columns are opt-in via --times).

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minrank/bounds.hpp"
#include "minrank/codec.hpp"
#include "minrank/experiments.hpp"
#include "minrank/graph.hpp"
#include "minrank/indexcode.hpp"

namespace {

using namespace minrank;

// Writes to --out when given, stdout otherwise.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bounds_csv(std::ostream& out, const BoundsReport& r) {
    out << "n,arcs,field,lower_sparsity,lower_indset,upper_clique_cover,exact,indset_exact,cover_exact\n";
    out << r.n << ',' << r.arc_count << ',' << r.field_order << ',' << r.lower_sparsity << ','
        << r.lower_indset << ',' << r.upper_clique_cover << ',';
    if (r.exact) out << *r.exact;
    out << ',' << (r.indset.exact ? 1 : 0) << ',' << (r.cover.exact ? 1 : 0) << '\n';
}

void dump_witnesses(const std::string& path, const BoundsReport& r) {
    nlohmann::json j;
    j["independent_set"] = r.indset.witness;
    j["coloring"] = r.cover.coloring;
    j["clique_cover_witness"] = matrix_to_json(r.cover.witness);
    if (r.exact_witness) j["exact_witness"] = matrix_to_json(*r.exact_witness);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open witness file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minrank bounds, linear index codes, and random-graph experiments"};
    app.require_subcommand(1);

    // common option storage
    std::string graph_in, graph_out, out_path, witness_out;
    std::uint32_t field_order = 2;
    std::uint64_t seed = 0;
    std::size_t trials = 10;
    double p = 0.5;
    std::size_t n = 0;
    double exact_budget = 24.0;

    auto* sample = app.add_subcommand("sample", "Sample G(n,p) and write it as an edge list");
    sample->add_option("--n", n, "vertex count")->required();
    sample->add_option("--p", p, "arc probability")->required();
    sample->add_option("--seed", seed, "PRNG seed");
    sample->add_option("--graph-out", graph_out, "output edge-list file (default stdout)");

    auto* bounds_cmd = app.add_subcommand("bounds", "All affordable minrank bounds for one graph");
    bounds_cmd->add_option("--graph-in", graph_in, "edge-list input file")->required();
    bounds_cmd->add_option("--field", field_order, "prime field order");
    bounds_cmd->add_option("--exact-budget", exact_budget, "exact enumeration budget in bits");
    bounds_cmd->add_option("--out", out_path, "CSV output file (default stdout)");
    bounds_cmd->add_option("--witness-out", witness_out, "JSON witness dump file");

    bool pin_diagonal = false;
    auto* exact_cmd = app.add_subcommand("exact", "Exact minrank by brute-force enumeration");
    exact_cmd->add_option("--graph-in", graph_in, "edge-list input file")->required();
    exact_cmd->add_option("--field", field_order, "prime field order");
    exact_cmd->add_option("--exact-budget", exact_budget, "enumeration budget in bits");
    exact_cmd->add_flag("--pin-diagonal", pin_diagonal,
                        "restrict diagonal entries to 1 (rank-preserving normalization)");
    exact_cmd->add_option("--out", out_path, "output file (default stdout)");
    exact_cmd->add_option("--witness-out", witness_out, "JSON witness dump file");

    auto* simulate = app.add_subcommand(
        "simulate", "Build an index code from the clique-cover witness and decode random messages");
    simulate->add_option("--graph-in", graph_in, "edge-list input file")->required();
    simulate->add_option("--field", field_order, "prime field order");
    simulate->add_option("--trials", trials, "number of random messages");
    simulate->add_option("--seed", seed, "PRNG seed");
    simulate->add_option("--out", out_path, "output file (default stdout)");

    std::vector<std::size_t> n_list;
    bool with_times = false;
    auto* scaling = app.add_subcommand("scaling", "Bound scaling study over G(n,p) samples");
    scaling->add_option("--n", n_list, "vertex counts (repeat or comma-separate)")
        ->required()
        ->delimiter(',');
    scaling->add_option("--p", p, "arc probability");
    scaling->add_option("--trials", trials, "trials per n");
    scaling->add_option("--seed", seed, "base seed");
    scaling->add_option("--field", field_order, "prime field order");
    scaling->add_option("--exact-budget", exact_budget, "exact enumeration budget in bits");
    scaling->add_flag("--times", with_times, "append wall-time columns (nondeterministic)");
    scaling->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* concentration =
        app.add_subcommand("concentration", "Spread of the clique-cover bound across samples");
    concentration->add_option("--n", n, "vertex count")->required();
    concentration->add_option("--p", p, "arc probability");
    concentration->add_option("--trials", trials, "number of samples (>= 2)");
    concentration->add_option("--seed", seed, "base seed");
    concentration->add_option("--field", field_order, "prime field order");
    concentration->add_option("--out", out_path, "CSV output file (default stdout)");

    auto* shifts = app.add_subcommand("shifts", "Bound table over all cyclic shifts of a graph");
    shifts->add_option("--graph-in", graph_in, "edge-list input file")->required();
    shifts->add_option("--field", field_order, "prime field order");
    shifts->add_option("--exact-budget", exact_budget, "exact enumeration budget in bits");
    shifts->add_option("--out", out_path, "CSV output file (default stdout)");

    std::string suite;
    std::size_t verify_n = 3;
    auto* verify = app.add_subcommand("verify", "Run a named property suite");
    verify->add_option("suite", suite, "one of: lemma31, corollary32, lemma33, lemma34, "
                                       "product-bound, sandwich-n4, indexcode")
        ->required();
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--n", verify_n, "max dimension (corollary32 only)");
    verify->add_option("--field", field_order, "prime field order (corollary32 only)");
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sample) {
            const DiGraph g = DiGraph::sample_gnp(n, p, seed);
            if (graph_out.empty())
                write_edge_list(std::cout, g);
            else
                save_edge_list(graph_out, g);
            return 0;
        }
        if (*bounds_cmd) {
            const DiGraph g = load_edge_list(graph_in);
            BoundsOptions opts;
            opts.exact_budget_bits = exact_budget;
            const BoundsReport report = compute_bounds(g, Field(field_order), opts);
            OutputSink sink(out_path);
            write_bounds_csv(sink.stream(), report);
            if (!witness_out.empty()) dump_witnesses(witness_out, report);
            return 0;
        }
        if (*exact_cmd) {
            const DiGraph g = load_edge_list(graph_in);
            const auto result = exact_minrank(g, Field(field_order), exact_budget, pin_diagonal);
            OutputSink sink(out_path);
            sink.stream() << "key,value\n"
                          << "n," << g.vertex_count() << '\n'
                          << "field," << field_order << '\n'
                          << "minrank," << result.rank << '\n';
            if (!witness_out.empty()) {
                nlohmann::json j;
                j["exact_witness"] = matrix_to_json(result.witness);
                std::ofstream wout(witness_out);
                if (!wout) throw std::runtime_error("cannot open witness file: " + witness_out);
                wout << j.dump(2) << '\n';
            }
            return 0;
        }
        if (*simulate) {
            const DiGraph g = load_edge_list(graph_in);
            const Field field(field_order);
            const CliqueCoverResult cover = clique_cover_upper_bound(g, field);
            const LinearIndexCode code = build_code(g, cover.witness);
            std::mt19937_64 rng(seed);
            std::size_t decodes = 0, failures = 0;
            for (std::size_t t = 0; t < trials; ++t) {
                std::vector<std::uint32_t> x(g.vertex_count());
                for (auto& v : x) v = static_cast<std::uint32_t>(rng() % field.order());
                const auto y = code.broadcast(x);
                for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                    std::map<std::size_t, std::uint32_t> side;
                    for (std::size_t j : code.side_information_indices(i)) side[j] = x[j];
                    ++decodes;
                    if (code.decode_symbol(i, y, side) != x[i]) ++failures;
                }
            }
            OutputSink sink(out_path);
            sink.stream() << "key,value\n"
                          << "n," << g.vertex_count() << '\n'
                          << "field," << field_order << '\n'
                          << "broadcast_length," << code.broadcast_length() << '\n'
                          << "naive_length," << g.vertex_count() << '\n'
                          << "trials," << trials << '\n'
                          << "decodes," << decodes << '\n'
                          << "decode_failures," << failures << '\n';
            return failures == 0 ? 0 : 1;
        }
        if (*scaling) {
            ScalingOptions opts;
            opts.n_list = n_list;
            opts.p = p;
            opts.trials = trials;
            opts.seed = seed;
            opts.field = Field(field_order);
            opts.bounds.exact_budget_bits = exact_budget;
            opts.with_times = with_times;
            const auto rows = run_scaling(opts);
            OutputSink sink(out_path);
            write_scaling_csv(sink.stream(), rows, with_times);
            return 0;
        }
        if (*concentration) {
            const auto report = run_concentration(n, p, trials, seed, Field(field_order));
            OutputSink sink(out_path);
            write_concentration_csv(sink.stream(), report);
            return 0;
        }
        if (*shifts) {
            const DiGraph g = load_edge_list(graph_in);
            BoundsOptions opts;
            opts.exact_budget_bits = exact_budget;
            const auto result = run_shift_scan(g, Field(field_order), opts);
            OutputSink sink(out_path);
            write_shift_csv(sink.stream(), result);
            std::cerr << "max lower bound over shifts: " << result.max_lower
                      << "\nmin upper bound over shifts: " << result.min_upper << '\n';
            return 0;
        }
        if (*verify) {
            OutputSink sink(out_path);
            bool ok;
            if (suite == "corollary32")
                ok = corollary32_table(verify_n, Field(field_order), sink.stream());
            else
                ok = run_verify(suite, seed, sink.stream());
            sink.stream() << (ok ? "PASS" : "FAIL") << '\n';
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "minrank/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minrank {

std::size_t sparsity_lower_bound(const DiGraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t denom = 4 * (n + g.arc_count());
    const std::size_t bound = (n * n + denom - 1) / denom;
    return std::max<std::size_t>(bound, 1);
}

namespace {

// Undirected adjacency as single-word bitmasks; only valid for n <= 64.
std::vector<std::uint64_t> adjacency_masks(const DiGraph& undirected) {
    const std::size_t n = undirected.vertex_count();
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : undirected.out_neighbors(u)) adj[u] |= std::uint64_t{1} << v;
    return adj;
}

struct MisSearch {
    const std::vector<std::uint64_t>& adj;
    std::size_t best = 0;
    std::uint64_t best_set = 0;

    void run(std::uint64_t cand, std::uint64_t chosen, std::size_t size) {
        if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
        if (cand == 0) {
            best = size;
            best_set = chosen;
            return;
        }
        // branch on the candidate with the most candidate-neighbors
        std::size_t pick = 0;
        int max_deg = -1;
        std::uint64_t scan = cand;
        while (scan) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(scan));
            scan &= scan - 1;
            const int d = std::popcount(adj[v] & cand);
            if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        }
        const std::uint64_t bit = std::uint64_t{1} << pick;
        run(cand & ~(bit | adj[pick]), chosen | bit, size + 1);  // include
        run(cand & ~bit, chosen, size);                          // exclude
    }
};

IndependentSetResult greedy_mis(const DiGraph& undirected) {
    const std::size_t n = undirected.vertex_count();
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> witness;
    std::size_t remaining = n;
    while (remaining > 0) {
        // min residual degree, ties by index
        std::size_t pick = n;
        std::size_t min_deg = n + 1;
        for (std::size_t u = 0; u < n; ++u) {
            if (!alive[u]) continue;
            std::size_t d = 0;
            for (std::size_t v : undirected.out_neighbors(u))
                if (alive[v]) ++d;
            if (d < min_deg) {
                min_deg = d;
                pick = u;
            }
        }
        witness.push_back(pick);
        alive[pick] = false;
        --remaining;
        for (std::size_t v : undirected.out_neighbors(pick))
            if (alive[v]) {
                alive[v] = false;
                --remaining;
            }
    }
    std::sort(witness.begin(), witness.end());
    return {witness.size(), std::move(witness), false};
}

}  // namespace

IndependentSetResult independent_set_lower_bound(const DiGraph& g, std::size_t exact_budget) {
    const DiGraph und = g.underlying_undirected();
    const std::size_t n = und.vertex_count();
    if (n > exact_budget || n > 64) return greedy_mis(und);

    const auto adj = adjacency_masks(und);
    MisSearch search{adj};
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    search.run(all, 0, 0);
    std::vector<std::size_t> witness;
    for (std::size_t v = 0; v < n; ++v)
        if (search.best_set & (std::uint64_t{1} << v)) witness.push_back(v);
    return {search.best, std::move(witness), true};
}

namespace {

std::vector<std::size_t> degree_desc_order(const DiGraph& undirected) {
    const std::size_t n = undirected.vertex_count();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return undirected.out_degree(a) > undirected.out_degree(b);
    });
    return order;
}

std::vector<std::uint32_t> greedy_coloring(const DiGraph& undirected) {
    const std::size_t n = undirected.vertex_count();
    std::vector<std::uint32_t> color(n, UINT32_MAX);
    for (std::size_t u : degree_desc_order(undirected)) {
        std::vector<bool> used(n, false);
        for (std::size_t v : undirected.out_neighbors(u))
            if (color[v] != UINT32_MAX) used[color[v]] = true;
        std::uint32_t c = 0;
        while (used[c]) ++c;
        color[u] = c;
    }
    return color;
}

struct ChromaticSearch {
    const std::vector<std::uint64_t>& adj;   // in branch order
    std::size_t n;
    std::size_t best;                        // current best color count (upper bound)
    std::vector<std::uint32_t> best_assign;  // in branch order
    std::vector<std::uint32_t> assign;

    void run(std::size_t idx, std::size_t used) {
        if (used >= best) return;
        if (idx == n) {
            best = used;
            best_assign = assign;
            return;
        }
        std::uint64_t neighbor_colors = 0;
        std::uint64_t lower_mask = (idx >= 64) ? ~std::uint64_t{0}
                                               : ((std::uint64_t{1} << idx) - 1);
        std::uint64_t before = adj[idx] & lower_mask;
        while (before) {
            const std::size_t v = static_cast<std::size_t>(std::countr_zero(before));
            before &= before - 1;
            neighbor_colors |= std::uint64_t{1} << assign[v];
        }
        const std::size_t limit = std::min(used + 1, best - 1);
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (neighbor_colors & (std::uint64_t{1} << c)) continue;
            assign[idx] = c;
            run(idx + 1, std::max(used, static_cast<std::size_t>(c) + 1));
        }
        assign[idx] = UINT32_MAX;
    }
};

// Exact chromatic number; vertices branched in descending-degree order.
std::vector<std::uint32_t> exact_coloring(const DiGraph& undirected) {
    const std::size_t n = undirected.vertex_count();
    const auto order = degree_desc_order(undirected);
    std::vector<std::size_t> pos(n);
    for (std::size_t t = 0; t < n; ++t) pos[order[t]] = t;

    // adjacency re-indexed to branch order
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v : undirected.out_neighbors(u)) adj[pos[u]] |= std::uint64_t{1} << pos[v];

    const auto greedy = greedy_coloring(undirected);
    const std::size_t greedy_colors =
        greedy.empty() ? 0 : *std::max_element(greedy.begin(), greedy.end()) + 1;

    ChromaticSearch search{adj, n, greedy_colors + 1, {}, std::vector<std::uint32_t>(n, UINT32_MAX)};
    // seed with the greedy solution so the search only looks for improvements
    search.best = greedy_colors + 1;
    search.best_assign.resize(n);
    for (std::size_t u = 0; u < n; ++u) search.best_assign[pos[u]] = greedy[u];
    search.best = greedy_colors;
    search.run(0, 0);

    std::vector<std::uint32_t> color(n);
    for (std::size_t u = 0; u < n; ++u) color[u] = search.best_assign[pos[u]];
    return color;
}

Matrix coloring_witness(const std::vector<std::uint32_t>& color, Field field) {
    const std::size_t n = color.size();
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (color[i] == color[j]) m(i, j) = 1;
    return m;
}

}  // namespace

CliqueCoverResult clique_cover_upper_bound(const DiGraph& g, Field field,
                                           std::size_t exact_budget) {
    const DiGraph conflict = g.complement().underlying_undirected();
    const bool exact = g.vertex_count() <= exact_budget && g.vertex_count() <= 64;
    std::vector<std::uint32_t> color = exact ? exact_coloring(conflict) : greedy_coloring(conflict);
    const std::size_t colors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    return {colors, color, coloring_witness(color, field), exact};
}

double exact_minrank_cost_bits(const DiGraph& g, Field field, bool pin_diagonal) {
    const double q = field.order();
    double bits = static_cast<double>(g.arc_count()) * std::log2(q);
    if (!pin_diagonal && field.order() > 2)
        bits += static_cast<double>(g.vertex_count()) * std::log2(q - 1);
    return bits;
}

namespace {

struct ArcList {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    explicit ArcList(const DiGraph& g) {
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            for (std::size_t v : g.out_neighbors(u)) arcs.emplace_back(u, v);
    }
};

// F2 path: representing matrices are diagonal-1 plus an arbitrary subset of
// arc entries; rows live in uint64 bitmasks.
ExactMinrankResult exact_minrank_f2(const DiGraph& g, std::size_t lower) {
    const std::size_t n = g.vertex_count();
    const ArcList arcs(g);
    const std::size_t a = arcs.arcs.size();

    std::size_t best = n + 1;
    std::uint64_t best_mask = 0;
    std::vector<std::uint64_t> rows(n);
    std::vector<std::uint64_t> scratch(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a); ++mask) {
        for (std::size_t i = 0; i < n; ++i) rows[i] = std::uint64_t{1} << i;
        for (std::size_t t = 0; t < a; ++t)
            if (mask & (std::uint64_t{1} << t))
                rows[arcs.arcs[t].first] |= std::uint64_t{1} << arcs.arcs[t].second;
        scratch = rows;
        const std::size_t r = detail::rank_f2_rows(scratch);
        if (r < best) {
            best = r;
            best_mask = mask;
            if (best <= lower) break;
        }
    }

    Matrix witness(n, n, Field(2));
    for (std::size_t i = 0; i < n; ++i) witness(i, i) = 1;
    for (std::size_t t = 0; t < a; ++t)
        if (best_mask & (std::uint64_t{1} << t)) witness(arcs.arcs[t].first, arcs.arcs[t].second) = 1;
    return {best, witness};
}

ExactMinrankResult exact_minrank_generic(const DiGraph& g, Field field, bool pin_diagonal,
                                         std::size_t lower) {
    const std::size_t n = g.vertex_count();
    const std::uint32_t q = field.order();
    const ArcList arcs(g);
    const std::size_t a = arcs.arcs.size();
    const std::size_t diag_choices = pin_diagonal ? 1 : q - 1;

    std::vector<std::uint32_t> arc_vals(a, 0);
    std::vector<std::uint32_t> diag_vals(n, 0);  // value = 1 + digit
    Matrix m(n, n, field);
    std::size_t best = n + 1;
    Matrix witness = Matrix::identity(n, field);

    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = 0;
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 + diag_vals[i];
        for (std::size_t t = 0; t < a; ++t) m(arcs.arcs[t].first, arcs.arcs[t].second) = arc_vals[t];
        const std::size_t r = detail::rank_generic(m);
        if (r < best) {
            best = r;
            witness = m;
            if (best <= lower) break;
        }
        // odometer: arc values in base q, then diagonal digits in base (q-1)
        std::size_t d = 0;
        for (; d < a; ++d) {
            if (++arc_vals[d] < q) break;
            arc_vals[d] = 0;
        }
        if (d == a) {
            std::size_t e = 0;
            for (; e < n; ++e) {
                if (++diag_vals[e] < diag_choices) break;
                diag_vals[e] = 0;
            }
            if (e == n) done = true;
        }
    }
    return {best, witness};
}

}  // namespace

ExactMinrankResult exact_minrank(const DiGraph& g, Field field, double budget_bits,
                                 bool pin_diagonal) {
    const double cost = exact_minrank_cost_bits(g, field, pin_diagonal);
    if (cost > budget_bits)
        throw BudgetExceededError(
            "exact minrank enumeration needs " + std::to_string(cost) + " bits, budget is " +
                std::to_string(budget_bits),
            static_cast<std::uint64_t>(std::ceil(cost)));

    const std::size_t lower =
        std::max<std::size_t>(independent_set_lower_bound(g).size, 1);
    if (field.order() == 2 && g.vertex_count() <= 64 && g.arc_count() < 64)
        return exact_minrank_f2(g, lower);
    return exact_minrank_generic(g, field, pin_diagonal, lower);
}

bool product_bound_holds(const DiGraph& g, Field field, double budget_bits) {
    const auto direct = exact_minrank(g, field, budget_bits);
    const auto comp = exact_minrank(g.complement(), field, budget_bits);
    return direct.rank * comp.rank >= g.vertex_count();
}

namespace {

SparseBasisSubmatrix extract_sparse_basis(const Matrix& m, std::vector<std::size_t> orig) {
    const std::size_t n = m.rows();
    const std::size_t k = m.rank();

    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) == 0) {
            std::vector<std::size_t> one{orig[i]};
            std::vector<std::size_t> local{i};
            return {std::move(one), m.principal_submatrix(local), 0, {}, {}};
        }

    // non-decreasing per-index sparsity, stable by index
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = m.index_sparsity(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return s[a] < s[b]; });

    for (std::size_t np = 1; np < n; ++np) {
        std::vector<std::size_t> prefix(order.begin(), order.begin() + np);
        std::sort(prefix.begin(), prefix.end());
        const Matrix sub = m.principal_submatrix(prefix);
        if (sub.rank() * n <= k * np) {
            std::vector<std::size_t> sub_orig(np);
            for (std::size_t t = 0; t < np; ++t) sub_orig[t] = orig[prefix[t]];
            return extract_sparse_basis(sub, std::move(sub_orig));
        }
    }

    return {std::move(orig), m, k, m.greedy_row_basis(order), m.greedy_column_basis(order)};
}

}  // namespace

SparseBasisSubmatrix sparse_basis_submatrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("sparse_basis_submatrix: square input required");
    const std::size_t n = m.rows();
    const std::size_t k = m.rank();

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    SparseBasisSubmatrix result = extract_sparse_basis(m, std::move(all));

    // executable form of the lemma: both postconditions must hold
    const std::size_t np = result.sub.rows();
    const std::size_t kp = result.sub_rank;
    if (kp * n > k * np) throw std::logic_error("sparse_basis_submatrix: relative rank postcondition failed");
    const std::size_t sp = result.sub.sparsity();
    std::size_t row_nnz = 0, col_nnz = 0;
    for (std::size_t i : result.row_basis)
        for (std::size_t j = 0; j < np; ++j)
            if (result.sub(i, j) != 0) ++row_nnz;
    for (std::size_t j : result.col_basis)
        for (std::size_t i = 0; i < np; ++i)
            if (result.sub(i, j) != 0) ++col_nnz;
    if (row_nnz * np > 2 * sp * kp || col_nnz * np > 2 * sp * kp)
        throw std::logic_error("sparse_basis_submatrix: basis sparsity postcondition failed");
    return result;
}

BoundsReport compute_bounds(const DiGraph& g, Field field, const BoundsOptions& opts) {
    BoundsReport report;
    report.n = g.vertex_count();
    report.arc_count = g.arc_count();
    report.field_order = field.order();
    report.lower_sparsity = sparsity_lower_bound(g);
    report.indset = independent_set_lower_bound(g, opts.indset_exact_budget);
    report.lower_indset = std::max<std::size_t>(report.indset.size, 1);
    report.cover = clique_cover_upper_bound(g, field, opts.color_exact_budget);
    report.upper_clique_cover = report.cover.colors;
    if (opts.attempt_exact &&
        exact_minrank_cost_bits(g, field) <= opts.exact_budget_bits) {
        auto exact = exact_minrank(g, field, opts.exact_budget_bits);
        report.exact = exact.rank;
        report.exact_witness = std::move(exact.witness);
    }
    return report;
}

}  // namespace minrank

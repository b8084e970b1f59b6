#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minrank/codec.hpp"
#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

namespace minrank {

/// ceil(n^2 / (4 (n + |A|))), clamped to >= 1. Any representing matrix has at
/// most n + |A| nonzeros, and a rank-r matrix with nonzero diagonal has at
/// least n^2/(4r) of them, so this is a valid minrank lower bound.
std::size_t sparsity_lower_bound(const DiGraph& g);

struct IndependentSetResult {
    std::size_t size;
    std::vector<std::size_t> witness;
    bool exact;
};

/// Independent set in the underlying undirected graph: exact branch-and-bound
/// when n <= exact_budget (and n <= 64), otherwise the min-degree greedy
/// heuristic. The size is a minrank lower bound either way.
IndependentSetResult independent_set_lower_bound(const DiGraph& g, std::size_t exact_budget = 40);

struct CliqueCoverResult {
    std::size_t colors;
    std::vector<std::uint32_t> coloring;  // per-vertex color in [0, colors)
    Matrix witness;                       // M[i][j] = 1 iff color(i) == color(j); rank == colors
    bool exact;
};

/// Proper coloring of the underlying undirected complement: exact chromatic
/// number via branch-and-bound when n <= exact_budget (and n <= 64), otherwise
/// greedy in descending-degree order with index tie-break. Each color class is
/// a bidirectional clique of g, so the block witness matrix represents g.
CliqueCoverResult clique_cover_upper_bound(const DiGraph& g, Field field = Field(2),
                                           std::size_t exact_budget = 20);

struct ExactMinrankResult {
    std::size_t rank;
    Matrix witness;
};

/// Exact minrank by enumerating every representing matrix: arc entries range
/// over all field values, diagonal entries over the q-1 nonzero values (over
/// F2 the diagonal is forced to 1). Throws BudgetExceededError when the
/// enumeration needs more than budget_bits bits. pin_diagonal restricts the
/// diagonal to all-ones, which preserves the minimum by row scaling.
ExactMinrankResult exact_minrank(const DiGraph& g, Field field, double budget_bits = 24.0,
                                 bool pin_diagonal = false);

/// Enumeration cost of exact_minrank in bits (log2 of the number of
/// representing matrices visited).
double exact_minrank_cost_bits(const DiGraph& g, Field field, bool pin_diagonal = false);

/// minrk(G) * minrk(complement G) >= n, checked with the exact oracle.
bool product_bound_holds(const DiGraph& g, Field field, double budget_bits = 24.0);

struct SparseBasisSubmatrix {
    std::vector<std::size_t> indices;  // ascending original indices of the principal submatrix
    Matrix sub;                        // the submatrix M', indexed consistently with `indices`
    std::size_t sub_rank;              // k'
    std::vector<std::size_t> row_basis;  // local indices into sub
    std::vector<std::size_t> col_basis;
};

/// Finds a principal submatrix M' with k'/n' <= k/n whose greedy row and
/// column bases (taken in non-decreasing per-index-sparsity order) each have
/// sparsity at most 2 s(M') k'/n'. A zero diagonal entry short-circuits to
/// that 1x1 zero submatrix. The two postconditions are checked before
/// returning and a failure throws std::logic_error.
SparseBasisSubmatrix sparse_basis_submatrix(const Matrix& m);

struct BoundsOptions {
    double exact_budget_bits = 24.0;
    std::size_t indset_exact_budget = 40;
    std::size_t color_exact_budget = 20;
    bool attempt_exact = true;
};

struct BoundsReport {
    std::size_t n = 0;
    std::size_t arc_count = 0;
    std::uint32_t field_order = 2;
    std::size_t lower_sparsity = 0;
    std::size_t lower_indset = 0;
    std::size_t upper_clique_cover = 0;
    std::optional<std::size_t> exact;
    IndependentSetResult indset{0, {}, false};
    CliqueCoverResult cover{0, {}, Matrix(1, 1, Field(2)), false};
    std::optional<Matrix> exact_witness;
};

/// Runs every affordable bound on one graph. Exact minrank is attempted only
/// when its enumeration cost fits the budget; the column stays empty otherwise.
BoundsReport compute_bounds(const DiGraph& g, Field field, const BoundsOptions& opts = {});

}  // namespace minrank

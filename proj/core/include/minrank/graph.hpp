#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "minrank/matrix.hpp"

namespace minrank {

/// Directed graph without self-loops, stored as adjacency bit-rows.
/// Immutable in normal use: construct, sample, or derive (complement, shift),
/// then query.
class DiGraph {
public:
    explicit DiGraph(std::size_t n);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool has_arc(std::size_t u, std::size_t v) const {
        check_pair(u, v);
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
    }
    void add_arc(std::size_t u, std::size_t v);
    void remove_arc(std::size_t u, std::size_t v);

    std::vector<std::size_t> out_neighbors(std::size_t u) const;
    std::size_t out_degree(std::size_t u) const;
    std::size_t max_out_degree() const;

    /// G(n,p): each of the n(n-1) ordered pairs is included independently with
    /// probability p. Deterministic given the seed: draws come from a
    /// std::mt19937_64 in row-major (u,v) order, one draw per ordered pair,
    /// converted to a double in [0,1) as (x >> 11) * 2^-53.
    static DiGraph sample_gnp(std::size_t n, double p, std::uint64_t seed);

    static DiGraph complete(std::size_t n);

    DiGraph complement() const;

    /// Arc (u,v) becomes (u, (v+i) mod n). Arcs that would become self-loops
    /// are dropped; when dropped_arcs is non-null it receives their count.
    DiGraph shifted(std::size_t i, std::size_t* dropped_arcs = nullptr) const;

    /// Symmetrized arc set: (u,v) present iff (u,v) or (v,u) in this graph.
    DiGraph underlying_undirected() const;

    friend bool operator==(const DiGraph& a, const DiGraph& b) noexcept {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    void check_pair(std::size_t u, std::size_t v) const;

    std::size_t n_;
    std::size_t words_;
    std::size_t arc_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Definition of a representing matrix: M square n x n with nonzero diagonal
/// and M[i][j] = 0 for every non-arc (i,j), i != j. Arc entries are free.
bool is_representing(const Matrix& m, const DiGraph& g);

/// Edge-list text format: first line "n m", then m lines "u v" (0-based).
DiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const DiGraph& g);
DiGraph load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const DiGraph& g);

}  // namespace minrank

#include "minrank/graph.hpp"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace minrank {

DiGraph::DiGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
}

void DiGraph::check_pair(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
}

void DiGraph::add_arc(std::size_t u, std::size_t v) {
    check_pair(u, v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    std::uint64_t& w = bits_[u * words_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    if (!(w & mask)) {
        w |= mask;
        ++arc_count_;
    }
}

void DiGraph::remove_arc(std::size_t u, std::size_t v) {
    check_pair(u, v);
    std::uint64_t& w = bits_[u * words_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    if (w & mask) {
        w &= ~mask;
        --arc_count_;
    }
}

std::vector<std::size_t> DiGraph::out_neighbors(std::size_t u) const {
    check_pair(u, 0);
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bitsw = bits_[u * words_ + w];
        while (bitsw) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bitsw)));
            bitsw &= bitsw - 1;
        }
    }
    return out;
}

std::size_t DiGraph::out_degree(std::size_t u) const {
    check_pair(u, 0);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[u * words_ + w]);
    return d;
}

std::size_t DiGraph::max_out_degree() const {
    std::size_t best = 0;
    for (std::size_t u = 0; u < n_; ++u) best = std::max(best, out_degree(u));
    return best;
}

DiGraph DiGraph::sample_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("arc probability must lie in [0,1]");
    DiGraph g(n);
    std::mt19937_64 rng(seed);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (draw < p) g.add_arc(u, v);
        }
    return g;
}

DiGraph DiGraph::complete(std::size_t n) {
    DiGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v) g.add_arc(u, v);
    return g;
}

DiGraph DiGraph::complement() const {
    DiGraph g(n_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t inv = ~bits_[u * words_ + w];
            // mask off the self-loop bit and the tail past n
            if (u / 64 == w) inv &= ~(std::uint64_t{1} << (u % 64));
            if (w == words_ - 1 && n_ % 64 != 0) inv &= (std::uint64_t{1} << (n_ % 64)) - 1;
            g.bits_[u * words_ + w] = inv;
            g.arc_count_ += std::popcount(inv);
        }
    }
    return g;
}

DiGraph DiGraph::shifted(std::size_t i, std::size_t* dropped_arcs) const {
    if (i >= n_) throw std::out_of_range("shift amount must lie in [0, n)");
    DiGraph g(n_);
    std::size_t dropped = 0;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v : out_neighbors(u)) {
            const std::size_t v2 = (v + i) % n_;
            if (v2 == u)
                ++dropped;
            else
                g.add_arc(u, v2);
        }
    if (dropped_arcs) *dropped_arcs = dropped;
    return g;
}

DiGraph DiGraph::underlying_undirected() const {
    DiGraph g(n_);
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v : out_neighbors(u)) {
            g.add_arc(u, v);
            g.add_arc(v, u);
        }
    return g;
}

bool is_representing(const Matrix& m, const DiGraph& g) {
    const std::size_t n = g.vertex_count();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("representing check: matrix/graph dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && m(i, j) != 0 && !g.has_arc(i, j)) return false;
    }
    return true;
}

DiGraph read_edge_list(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header line \"n m\"");
    DiGraph g(n);
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::runtime_error("edge list: expected " + std::to_string(m) + " arcs, got " +
                                     std::to_string(e));
        g.add_arc(u, v);
    }
    return g;
}

void write_edge_list(std::ostream& out, const DiGraph& g) {
    out << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
        for (std::size_t v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
}

DiGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

void save_edge_list(const std::string& path, const DiGraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    write_edge_list(out, g);
}

}  // namespace minrank

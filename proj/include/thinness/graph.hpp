#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thinness {

// Vertices are labeled 0..n-1 and vertex sets are 64-bit masks, which caps
// graph size at 64. Everything in this library is desk-scale; the cap is
// enforced at construction.
inline constexpr int max_vertices = 64;

using VertexSet = std::uint64_t;

inline VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet full_set(int n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

template <typename F>
void for_each_bit(VertexSet s, F f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    for_each_bit(s, [&](int v) { out.push_back(v); });
    return out;
}

// Thrown when an exact computation is asked for beyond its configured cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Finite simple undirected graph with adjacency-set semantics.
// Invariants: symmetric, loopless, all neighbor indices in [0, n).
class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("graph size must be in [0, 64], got " + std::to_string(n));
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<size_t>(u)] |= bit(v);
        adj_[static_cast<size_t>(v)] |= bit(u);
    }

    bool has_edge(int u, int v) const { return u != v && (adj_[static_cast<size_t>(u)] >> v & 1); }

    VertexSet neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return adj_[static_cast<size_t>(v)] | bit(v); }
    int degree(int v) const { return popcount(adj_[static_cast<size_t>(v)]); }

    VertexSet vertices() const { return full_set(n_); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; v++) twice += degree(v);
        return twice / 2;
    }

    // Edges as sorted (u, v) pairs with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; u++)
            for_each_bit(adj_[static_cast<size_t>(u)] & ~(full_set(u + 1)), [&](int v) { out.emplace_back(u, v); });
        return out;
    }

    bool has_any_edge() const {
        for (int v = 0; v < n_; v++)
            if (adj_[static_cast<size_t>(v)]) return true;
        return false;
    }

    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n_ == 0) return 0;
        int d = n_;
        for (int v = 0; v < n_; v++) d = std::min(d, degree(v));
        return d;
    }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; v++)
            g.adj_[static_cast<size_t>(v)] = ~adj_[static_cast<size_t>(v)] & vertices() & ~bit(v);
        return g;
    }

    // Induced subgraph on W; vertices relabeled 0..|W|-1 preserving the
    // relative order of the original labels.
    Graph induced(VertexSet w) const {
        if ((w & ~vertices()) != 0) throw std::invalid_argument("induced: vertex out of range");
        std::vector<int> verts = set_to_vector(w);
        Graph g(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); i++)
            for (size_t j = i + 1; j < verts.size(); j++)
                if (has_edge(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    Graph induced(const std::vector<int>& w) const {
        VertexSet s = 0;
        for (int v : w) {
            check_vertex(v);
            s |= bit(v);
        }
        return induced(s);
    }

    // Connected components as sorted vertex lists (original labels).
    std::vector<std::vector<int>> components() const {
        std::vector<std::vector<int>> out;
        VertexSet seen = 0;
        for (int s = 0; s < n_; s++) {
            if (seen & bit(s)) continue;
            VertexSet comp = bit(s), frontier = bit(s);
            while (frontier) {
                VertexSet next = 0;
                for_each_bit(frontier, [&](int v) { next |= neighbors(v); });
                frontier = next & ~comp;
                comp |= frontier;
            }
            seen |= comp;
            out.push_back(set_to_vector(comp));
        }
        return out;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

}  // namespace thinness

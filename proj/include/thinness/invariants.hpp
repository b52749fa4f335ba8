#pragma once

#include <array>
#include <functional>
#include <vector>

#include "thinness/coloring.hpp"
#include "thinness/graph.hpp"

namespace thinness {

inline constexpr int default_invariant_cap = 16;

namespace detail {
inline void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.n()) +
                          " vertices, exact cap is " + std::to_string(cap));
}
}  // namespace detail

// Minimum vertex cover size; the complement of a cover is a stable set.
inline int min_vertex_cover(const Graph& g) { return g.n() - stability_number(g); }

// Maximum induced matching: edges pairwise at distance >= 2.
inline int max_induced_matching(const Graph& g, int cap = default_invariant_cap) {
    detail::check_cap(g, cap, "max_induced_matching");
    auto edge_list = g.edges();
    int m = static_cast<int>(edge_list.size());
    int best = 0;
    // blocked = vertices adjacent to (or in) the matching so far
    std::function<void(int, int, VertexSet)> rec = [&](int idx, int chosen, VertexSet blocked) {
        best = std::max(best, chosen);
        if (idx >= m || chosen + (m - idx) <= best) return;
        auto [u, v] = edge_list[static_cast<size_t>(idx)];
        if (!((blocked & bit(u)) || (blocked & bit(v))))
            rec(idx + 1, chosen + 1, blocked | g.closed_neighbors(u) | g.closed_neighbors(v));
        rec(idx + 1, chosen, blocked);
    };
    rec(0, 0, 0);
    return best;
}

// Longest induced path, in edges; per-component maximum when disconnected.
inline int longest_induced_path(const Graph& g, int cap = default_invariant_cap) {
    detail::check_cap(g, cap, "longest_induced_path");
    int best = 0;
    // extend at `tail`; `allowed` excludes neighbors of interior vertices
    std::function<void(int, VertexSet, int)> rec = [&](int tail, VertexSet allowed, int len) {
        best = std::max(best, len);
        VertexSet next = g.neighbors(tail) & allowed;
        for_each_bit(next, [&](int w) { rec(w, allowed & ~g.closed_neighbors(tail), len + 1); });
    };
    for (int s = 0; s < g.n(); s++) rec(s, g.vertices() & ~bit(s), 0);
    return best;
}

// Eccentricity maximum; error on disconnected graphs.
inline int diameter(const Graph& g) {
    if (g.n() == 0) throw std::domain_error("diameter: empty graph");
    if (!g.connected()) throw std::domain_error("diameter: graph is disconnected");
    int diam = 0;
    for (int s = 0; s < g.n(); s++) {
        VertexSet seen = bit(s), frontier = bit(s);
        int dist = 0;
        while (seen != g.vertices()) {
            VertexSet next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~seen;
            seen |= frontier;
            dist++;
        }
        diam = std::max(diam, dist);
    }
    return diam;
}

struct GraphInvariants {
    int alpha = 0;
    int omega = 0;
    int chi = 0;
    int chi_complement = 0;
    int tau = 0;
    int mim = 0;
    int lip = 0;
    int diam = 0;  // -1 when disconnected
    int max_degree = 0;
    int min_degree = 0;
};

// Everything exact, by exhaustive search; |V| must be within the cap.
inline GraphInvariants graph_invariants(const Graph& g, int cap = default_invariant_cap) {
    detail::check_cap(g, cap, "graph_invariants");
    GraphInvariants r;
    r.alpha = stability_number(g);
    r.omega = clique_number(g);
    r.chi = chromatic_number(g);
    r.chi_complement = chromatic_number(g.complement());
    r.tau = min_vertex_cover(g);
    r.mim = max_induced_matching(g, cap);
    r.lip = longest_induced_path(g, cap);
    r.diam = g.connected() && g.n() > 0 ? diameter(g) : -1;
    r.max_degree = g.max_degree();
    r.min_degree = g.min_degree();
    return r;
}

}  // namespace thinness

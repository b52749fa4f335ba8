#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "thinness/graph.hpp"

namespace thinness {

// Chordality via maximum cardinality search + perfect elimination check.
inline bool is_chordal(const Graph& g) {
    int n = g.n();
    if (n <= 2) return true;
    std::vector<int> weight(static_cast<size_t>(n), 0), visit_order;
    VertexSet numbered = 0;
    for (int step = 0; step < n; step++) {
        int pick = -1;
        for (int v = 0; v < n; v++) {
            if (numbered & bit(v)) continue;
            if (pick < 0 || weight[static_cast<size_t>(v)] > weight[static_cast<size_t>(pick)]) pick = v;
        }
        numbered |= bit(pick);
        visit_order.push_back(pick);
        for_each_bit(g.neighbors(pick) & ~numbered, [&](int u) { weight[static_cast<size_t>(u)]++; });
    }
    // reverse of the MCS visit order is a perfect elimination order iff chordal
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());
    std::vector<int> elim_pos(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) elim_pos[static_cast<size_t>(elim[static_cast<size_t>(i)])] = i;
    for (int i = 0; i < n; i++) {
        int v = elim[static_cast<size_t>(i)];
        VertexSet later = 0;
        for_each_bit(g.neighbors(v), [&](int u) {
            if (elim_pos[static_cast<size_t>(u)] > i) later |= bit(u);
        });
        if (!later) continue;
        int m = -1;
        for_each_bit(later, [&](int u) {
            if (m < 0 || elim_pos[static_cast<size_t>(u)] < elim_pos[static_cast<size_t>(m)]) m = u;
        });
        if ((later & ~bit(m) & ~g.neighbors(m)) != 0) return false;
    }
    return true;
}

// Asteroidal triple: three pairwise nonadjacent vertices, each pair joined by
// a path avoiding the closed neighborhood of the third.
inline bool has_asteroidal_triple(const Graph& g) {
    int n = g.n();
    if (n < 3) return false;
    // comp[z][v]: component id of v in G - N[z], or -1 when v is in N[z]
    std::vector<std::vector<int>> comp(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int z = 0; z < n; z++) {
        VertexSet allowed = g.vertices() & ~g.closed_neighbors(z);
        int id = 0;
        VertexSet seen = 0;
        for_each_bit(allowed, [&](int s) {
            if (seen & bit(s)) return;
            VertexSet c = bit(s), frontier = bit(s);
            while (frontier) {
                VertexSet next = 0;
                for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
                frontier = next & allowed & ~c;
                c |= frontier;
            }
            seen |= c;
            for_each_bit(c, [&](int v) { comp[static_cast<size_t>(z)][static_cast<size_t>(v)] = id; });
            id++;
        });
    }
    auto joined = [&](int a, int b, int avoid) {
        int ca = comp[static_cast<size_t>(avoid)][static_cast<size_t>(a)];
        return ca >= 0 && ca == comp[static_cast<size_t>(avoid)][static_cast<size_t>(b)];
    };
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) {
            if (g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; w++) {
                if (g.has_edge(u, w) || g.has_edge(v, w)) continue;
                if (joined(u, v, w) && joined(u, w, v) && joined(v, w, u)) return true;
            }
        }
    return false;
}

// Lekkerkerker-Boland: interval iff chordal and asteroidal-triple-free.
inline bool is_interval(const Graph& g) { return is_chordal(g) && !has_asteroidal_triple(g); }

// A largest vertex set inducing an interval subgraph; exhaustive, n <= cap.
// Ties break toward the numerically smallest mask.
inline VertexSet max_induced_interval_subgraph(const Graph& g, int cap = 10) {
    if (g.n() > cap)
        throw CapExceeded("max_induced_interval_subgraph: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(cap));
    VertexSet best = 0;
    int best_size = 0;
    for (VertexSet s = 1; s <= g.vertices(); s++) {
        if (popcount(s) <= best_size) continue;
        if (is_interval(g.induced(s))) {
            best = s;
            best_size = popcount(s);
        }
    }
    return best;
}

// Interval completion from a vertex order: give v_i the interval
// [i, latest position in N[v_i]]; the resulting interval supergraph adds
// edge (v_i, v_j), i < j, whenever some neighbor of v_i sits at or beyond j.
inline Graph interval_completion_for_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::vector<int> right(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        int r = i;
        for_each_bit(g.neighbors(order[static_cast<size_t>(i)]),
                     [&](int u) { r = std::max(r, pos[static_cast<size_t>(u)]); });
        right[static_cast<size_t>(i)] = r;
    }
    Graph h(n);
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (right[static_cast<size_t>(i)] >= j) h.add_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]);
    return h;
}

// Backtracking transitive-orientation search with closure propagation.
// Returns an orientation as a list of directed pairs, or nullopt.
inline std::optional<std::vector<std::pair<int, int>>> transitive_orientation(const Graph& g, int cap = 8) {
    int n = g.n();
    if (n > cap)
        throw CapExceeded("transitive_orientation: " + std::to_string(n) + " vertices exceeds cap " +
                          std::to_string(cap));
    std::vector<std::vector<int>> dir(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    std::vector<std::pair<int, int>> trail;

    std::function<bool(int, int)> orient = [&](int u, int v) -> bool {
        if (dir[static_cast<size_t>(u)][static_cast<size_t>(v)] == 1) return true;
        if (dir[static_cast<size_t>(u)][static_cast<size_t>(v)] == -1) return false;
        dir[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        dir[static_cast<size_t>(v)][static_cast<size_t>(u)] = -1;
        trail.emplace_back(u, v);
        for (int w = 0; w < n; w++) {
            // u->v, v->w forces u->w
            if (dir[static_cast<size_t>(v)][static_cast<size_t>(w)] == 1) {
                if (!g.has_edge(u, w) || !orient(u, w)) return false;
            }
            // w->u, u->v forces w->v
            if (dir[static_cast<size_t>(w)][static_cast<size_t>(u)] == 1) {
                if (!g.has_edge(w, v) || !orient(w, v)) return false;
            }
        }
        return true;
    };

    std::function<bool()> solve = [&]() -> bool {
        int eu = -1, ev = -1;
        for (int u = 0; u < n && eu < 0; u++)
            for (int v = u + 1; v < n; v++)
                if (g.has_edge(u, v) && dir[static_cast<size_t>(u)][static_cast<size_t>(v)] == 0) {
                    eu = u;
                    ev = v;
                    break;
                }
        if (eu < 0) return true;
        for (int flip = 0; flip < 2; flip++) {
            size_t mark = trail.size();
            int a = flip ? ev : eu, b = flip ? eu : ev;
            if (orient(a, b) && solve()) return true;
            while (trail.size() > mark) {
                auto [x, y] = trail.back();
                trail.pop_back();
                dir[static_cast<size_t>(x)][static_cast<size_t>(y)] = 0;
                dir[static_cast<size_t>(y)][static_cast<size_t>(x)] = 0;
            }
        }
        return false;
    };

    if (!solve()) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; u++)
        for (int v = 0; v < n; v++)
            if (dir[static_cast<size_t>(u)][static_cast<size_t>(v)] == 1) out.emplace_back(u, v);
    return out;
}

inline bool is_comparability(const Graph& g, int cap = 8) { return transitive_orientation(g, cap).has_value(); }

inline bool is_cocomparability(const Graph& g, int cap = 8) { return is_comparability(g.complement(), cap); }

}  // namespace thinness

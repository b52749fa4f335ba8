#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "thinness/graph.hpp"

namespace thinness {

// Maximum clique as a vertex set, branch-and-bound over bitsets.
// `stop_at` short-circuits once a clique of that size is found (0 = exact).
inline VertexSet max_clique(const Graph& g, int stop_at = 0) {
    VertexSet best = 0;
    int best_size = 0;
    std::function<void(VertexSet, VertexSet)> rec = [&](VertexSet current, VertexSet cand) {
        int size = popcount(current);
        if (size > best_size) {
            best_size = size;
            best = current;
        }
        if (stop_at > 0 && best_size >= stop_at) return;
        while (cand) {
            if (size + popcount(cand) <= best_size) return;
            int v = lowest(cand);
            cand &= cand - 1;
            rec(current | bit(v), cand & g.neighbors(v));
            if (stop_at > 0 && best_size >= stop_at) return;
        }
    };
    rec(0, g.vertices());
    return best;
}

inline int clique_number(const Graph& g) { return popcount(max_clique(g)); }

inline VertexSet max_stable_set(const Graph& g) { return max_clique(g.complement()); }

inline int stability_number(const Graph& g) { return popcount(max_stable_set(g)); }

// Greedy coloring in descending-degree order; returns the class of each vertex.
inline std::vector<int> greedy_coloring(const Graph& g) {
    int n = g.n();
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<size_t>(n), -1);
    for (int v : order) {
        VertexSet used = 0;
        for_each_bit(g.neighbors(v), [&](int u) {
            if (color[static_cast<size_t>(u)] >= 0) used |= bit(color[static_cast<size_t>(u)]);
        });
        color[static_cast<size_t>(v)] = lowest(~used);
    }
    return color;
}

inline int color_count(const std::vector<int>& coloring) {
    int k = 0;
    for (int c : coloring) k = std::max(k, c + 1);
    return k;
}

struct ColoringResult {
    int chromatic_number = 0;
    std::vector<int> coloring;  // vertex -> class, classes 0..k-1 all used
};

// Exact chromatic number with a witnessing coloring. Branch and bound:
// a maximum clique seeds the lower bound (its vertices are pre-colored),
// greedy seeds the upper bound, then DSATUR-style branching closes the gap.
inline ColoringResult exact_coloring(const Graph& g) {
    int n = g.n();
    if (n == 0) return {0, {}};

    VertexSet clique = max_clique(g);
    int lower = popcount(clique);
    std::vector<int> best = greedy_coloring(g);
    int upper = color_count(best);
    if (upper == lower) return {upper, best};

    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> clique_verts = set_to_vector(clique);
    for (size_t i = 0; i < clique_verts.size(); i++) color[static_cast<size_t>(clique_verts[i])] = static_cast<int>(i);

    // branch on the uncolored vertex with the most distinctly-colored neighbors
    std::function<void(int, int)> rec = [&](int colored, int used) {
        if (used >= upper) return;
        if (colored == n) {
            upper = used;
            best = color;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; v++) {
            if (color[static_cast<size_t>(v)] >= 0) continue;
            VertexSet sat = 0;
            for_each_bit(g.neighbors(v), [&](int u) {
                if (color[static_cast<size_t>(u)] >= 0) sat |= bit(color[static_cast<size_t>(u)]);
            });
            int s = popcount(sat), d = g.degree(v);
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = v;
                pick_sat = s;
                pick_deg = d;
            }
        }
        VertexSet forbidden = 0;
        for_each_bit(g.neighbors(pick), [&](int u) {
            if (color[static_cast<size_t>(u)] >= 0) forbidden |= bit(color[static_cast<size_t>(u)]);
        });
        int limit = std::min(used + 1, upper - 1);  // at most one fresh class, never reaching upper
        for (int c = 0; c < limit; c++) {
            if (forbidden & bit(c)) continue;
            color[static_cast<size_t>(pick)] = c;
            rec(colored + 1, std::max(used, c + 1));
            color[static_cast<size_t>(pick)] = -1;
            if (upper == lower) return;
        }
    };
    rec(static_cast<int>(clique_verts.size()), lower);

    // normalize class ids to 0..k-1 in order of first appearance
    std::vector<int> remap(static_cast<size_t>(color_count(best)), -1);
    int next = 0;
    for (int& c : best) {
        if (remap[static_cast<size_t>(c)] < 0) remap[static_cast<size_t>(c)] = next++;
        c = remap[static_cast<size_t>(c)];
    }
    return {next, best};
}

inline int chromatic_number(const Graph& g) { return exact_coloring(g).chromatic_number; }

}  // namespace thinness

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thinness/graph.hpp"

namespace thinness {

inline constexpr int canonical_cap = 10;

namespace detail {

// Order-preserving color refinement (1-WL): repeatedly split classes by the
// multiset of neighbor colors until stable. Color ids track class order.
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
    int n = g.n();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
        for (int v = 0; v < n; v++) {
            std::vector<int> key;
            key.push_back(color[static_cast<size_t>(v)]);
            std::vector<int> nb;
            for_each_bit(g.neighbors(v), [&](int u) { nb.push_back(color[static_cast<size_t>(u)]); });
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            keyed[static_cast<size_t>(v)] = {std::move(key), v};
        }
        std::vector<std::vector<int>> distinct;
        for (auto& [key, v] : keyed) distinct.push_back(key);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(static_cast<size_t>(n));
        for (auto& [key, v] : keyed)
            next[static_cast<size_t>(v)] =
                static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), key) - distinct.begin());
        if (next == color) return color;
        color = std::move(next);
    }
}

inline std::vector<std::uint64_t> signature_for_order(const Graph& g, const std::vector<int>& order) {
    int n = g.n();
    std::vector<std::uint64_t> sig{static_cast<std::uint64_t>(n)};
    std::uint64_t word = 0;
    int nbits = 0;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            word = word << 1 | (g.has_edge(order[static_cast<size_t>(i)], order[static_cast<size_t>(j)]) ? 1 : 0);
            if (++nbits == 64) {
                sig.push_back(word);
                word = 0;
                nbits = 0;
            }
        }
    if (nbits) sig.push_back(word << (64 - nbits));
    return sig;
}

// Exact canonical signature by individualization-refinement: branch over the
// first non-singleton color class and keep the lexicographically smallest
// discrete signature.
inline std::vector<std::uint64_t> canonical_signature(const Graph& g) {
    int n = g.n();
    std::vector<std::uint64_t> best;
    std::function<void(std::vector<int>)> rec = [&](std::vector<int> color) {
        color = refine_colors(g, color);
        std::vector<std::vector<int>> classes(static_cast<size_t>(n));
        for (int v = 0; v < n; v++) classes[static_cast<size_t>(color[static_cast<size_t>(v)])].push_back(v);
        int split = -1;
        for (int c = 0; c < n; c++)
            if (classes[static_cast<size_t>(c)].size() > 1) {
                split = c;
                break;
            }
        if (split < 0) {
            std::vector<int> order(static_cast<size_t>(n));
            for (int v = 0; v < n; v++) order[static_cast<size_t>(color[static_cast<size_t>(v)])] = v;
            auto sig = signature_for_order(g, order);
            if (best.empty() || sig < best) best = std::move(sig);
            return;
        }
        for (int v : classes[static_cast<size_t>(split)]) {
            std::vector<int> child(static_cast<size_t>(n));
            for (int u = 0; u < n; u++)
                child[static_cast<size_t>(u)] = 2 * color[static_cast<size_t>(u)] + (u == v ? 0 : 1);
            rec(std::move(child));
        }
    };
    rec(std::vector<int>(static_cast<size_t>(n), 0));
    return best;
}

}  // namespace detail

// Isomorphism-invariant key for n <= 10 (exact canonicalization); beyond
// that, a degree fingerprint plus the verbatim edge list (collision-safe:
// equal keys with different edge lists never arise).
inline std::string canonical_key(const Graph& g) {
    std::ostringstream out;
    if (g.n() <= canonical_cap) {
        out << "c:" << g.n() << ":";
        for (std::uint64_t w : detail::canonical_signature(g)) out << std::hex << w << ".";
    } else {
        std::vector<int> degs(static_cast<size_t>(g.n()));
        for (int v = 0; v < g.n(); v++) degs[static_cast<size_t>(v)] = g.degree(v);
        std::sort(degs.begin(), degs.end());
        out << "f:" << g.n() << ":";
        for (int d : degs) out << d << ",";
        out << ":";
        for (auto [u, v] : g.edges()) out << u << "-" << v << ",";
    }
    return out.str();
}

// Exact isomorphism test by backtracking with degree pruning. Intended for
// desk-scale graphs (identity checks on products up to ~16 vertices).
inline bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.n();
    if (b.n() != n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da(static_cast<size_t>(n)), db(static_cast<size_t>(n));
    for (int v = 0; v < n; v++) {
        da[static_cast<size_t>(v)] = a.degree(v);
        db[static_cast<size_t>(v)] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map_ab(static_cast<size_t>(n), -1);
    VertexSet used_b = 0;
    // map vertices of a in descending-degree order
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return da[static_cast<size_t>(x)] > da[static_cast<size_t>(y)]; });
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[static_cast<size_t>(idx)];
        for (int w = 0; w < n; w++) {
            if (used_b & bit(w)) continue;
            if (db[static_cast<size_t>(w)] != da[static_cast<size_t>(v)]) continue;
            bool ok = true;
            for (int i = 0; i < idx && ok; i++) {
                int v2 = order[static_cast<size_t>(i)];
                if (a.has_edge(v, v2) != b.has_edge(w, map_ab[static_cast<size_t>(v2)])) ok = false;
            }
            if (!ok) continue;
            map_ab[static_cast<size_t>(v)] = w;
            used_b |= bit(w);
            if (rec(idx + 1)) return true;
            used_b &= ~bit(w);
            map_ab[static_cast<size_t>(v)] = -1;
        }
        return false;
    };
    return rec(0);
}

// Vertex orbits under the automorphism group, exact by permutation
// enumeration for n <= 8; one orbit per vertex (no merging) beyond that.
inline std::vector<int> automorphism_orbits(const Graph& g) {
    int n = g.n();
    std::vector<int> parent(static_cast<size_t>(n));
    for (int v = 0; v < n; v++) parent[static_cast<size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        return v;
    };
    if (n > 8 || n < 2) return parent;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) perm[static_cast<size_t>(i)] = i;
    do {
        bool aut = true;
        for (int u = 0; u < n && aut; u++)
            for (int v = u + 1; v < n && aut; v++)
                if (g.has_edge(u, v) != g.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)])) aut = false;
        if (aut)
            for (int v = 0; v < n; v++) {
                int a = find(v), b = find(perm[static_cast<size_t>(v)]);
                if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int v = 0; v < n; v++) parent[static_cast<size_t>(v)] = find(v);
    return parent;
}

inline std::vector<int> orbit_representatives(const Graph& g) {
    auto orbits = automorphism_orbits(g);
    std::vector<int> reps;
    for (int v = 0; v < g.n(); v++)
        if (orbits[static_cast<size_t>(v)] == v) reps.push_back(v);
    return reps;
}

// All graphs on exactly n vertices, one representative per isomorphism class,
// in deterministic order. Exhaustive over edge masks; n <= 7.
inline std::vector<Graph> all_graphs_up_to_iso(int n) {
    if (n > 7) throw CapExceeded("all_graphs_up_to_iso: n > 7");
    int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) slots.emplace_back(u, v);
    std::map<std::string, Graph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask++) {
        Graph g(n);
        for (int i = 0; i < m; i++)
            if (mask >> i & 1) g.add_edge(slots[static_cast<size_t>(i)].first, slots[static_cast<size_t>(i)].second);
        classes.emplace(canonical_key(g), std::move(g));
    }
    std::vector<Graph> out;
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

// All isomorphism classes with 1..max_n vertices.
inline std::vector<Graph> all_graphs_up_to_size(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; n++) {
        auto batch = all_graphs_up_to_iso(n);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

// Deterministic corpus of `count` pairwise non-isomorphic random graphs on n
// vertices (edge probability 1/2, fixed seed).
inline std::vector<Graph> random_graph_corpus(int n, int count, std::uint32_t seed = 20240601) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    std::vector<std::string> seen;
    while (static_cast<int>(out.size()) < count) {
        Graph g(n);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (rng() & 1) g.add_edge(u, v);
        std::string key = canonical_key(g);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace thinness

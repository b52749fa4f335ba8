#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinness/graph.hpp"

namespace thinness {

enum class Family {
    complete,            // K_n
    empty,               // nK_1
    path,                // P_n
    cycle,               // C_n
    complete_bipartite,  // K_{a,b}
    matching,            // tK_2, pairs (2i, 2i+1)
    complement_matching, // complement of tK_2
    crown,               // CR_n = K_{n,n} minus the matching (i, n+i)
    grid,                // GR_r, row-major labels
    hypercube,           // Q_d, label = binary string value
    claw,                // K_{1,3}, vertex 0 is the center
    boxminus,            // G_1 with G_2 joined by the matching {v, f(v)}
};

struct FamilySpec {
    Family name;
    std::vector<int> params;
    // boxminus only: the two component graphs and the bijection f.
    std::optional<Graph> g1, g2;
    std::vector<int> bijection;
};

inline std::string family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::empty: return "empty";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::matching: return "matching";
        case Family::complement_matching: return "complement_matching";
        case Family::crown: return "crown";
        case Family::grid: return "grid";
        case Family::hypercube: return "hypercube";
        case Family::claw: return "claw";
        case Family::boxminus: return "boxminus";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::complete, Family::empty, Family::path, Family::cycle,
                     Family::complete_bipartite, Family::matching, Family::complement_matching,
                     Family::crown, Family::grid, Family::hypercube, Family::claw, Family::boxminus})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

namespace detail {
inline int require_param(const FamilySpec& spec, size_t idx, int min_value, const char* what) {
    if (spec.params.size() <= idx)
        throw std::invalid_argument(std::string("family ") + family_name(spec.name) + ": missing parameter " + what);
    int v = spec.params[idx];
    if (v < min_value)
        throw std::invalid_argument(std::string("family ") + family_name(spec.name) + ": parameter " + what +
                                    " must be >= " + std::to_string(min_value) + ", got " + std::to_string(v));
    return v;
}
}  // namespace detail

// Two graphs of equal order joined by the perfect matching {v, f(v)};
// labels are V(G1) first, then V(G2).
inline Graph boxminus(const Graph& g1, const Graph& g2, const std::vector<int>& f) {
    int n = g1.n();
    if (g2.n() != n) throw std::invalid_argument("boxminus: graphs must have equal order");
    if (static_cast<int>(f.size()) != n) throw std::invalid_argument("boxminus: bijection size mismatch");
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int v : f) {
        if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
            throw std::invalid_argument("boxminus: f is not a bijection on [0, n)");
        hit[static_cast<size_t>(v)] = true;
    }
    Graph g(2 * n);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(n + u, n + v);
    for (int v = 0; v < n; v++) g.add_edge(v, n + f[v]);
    return g;
}

inline Graph make_family(const FamilySpec& spec) {
    using detail::require_param;
    switch (spec.name) {
        case Family::complete: {
            int n = require_param(spec, 0, 0, "n");
            Graph g(n);
            for (int u = 0; u < n; u++)
                for (int v = u + 1; v < n; v++) g.add_edge(u, v);
            return g;
        }
        case Family::empty:
            return Graph(require_param(spec, 0, 0, "n"));
        case Family::path: {
            int n = require_param(spec, 0, 1, "n");
            Graph g(n);
            for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
            return g;
        }
        case Family::cycle: {
            int n = require_param(spec, 0, 3, "n");
            Graph g(n);
            for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
            return g;
        }
        case Family::complete_bipartite: {
            int a = require_param(spec, 0, 1, "a");
            int b = spec.params.size() >= 2 ? require_param(spec, 1, 1, "b") : a;
            Graph g(a + b);
            for (int u = 0; u < a; u++)
                for (int v = 0; v < b; v++) g.add_edge(u, a + v);
            return g;
        }
        case Family::matching: {
            int t = require_param(spec, 0, 1, "t");
            Graph g(2 * t);
            for (int i = 0; i < t; i++) g.add_edge(2 * i, 2 * i + 1);
            return g;
        }
        case Family::complement_matching: {
            FamilySpec m{Family::matching, spec.params, {}, {}, {}};
            return make_family(m).complement();
        }
        case Family::crown: {
            int n = require_param(spec, 0, 1, "n");
            Graph g(2 * n);
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++)
                    if (i != j) g.add_edge(i, n + j);
            return g;
        }
        case Family::grid: {
            int r = require_param(spec, 0, 1, "r");
            Graph g(r * r);
            for (int i = 0; i < r; i++)
                for (int j = 0; j < r; j++) {
                    if (j + 1 < r) g.add_edge(i * r + j, i * r + j + 1);
                    if (i + 1 < r) g.add_edge(i * r + j, (i + 1) * r + j);
                }
            return g;
        }
        case Family::hypercube: {
            int d = require_param(spec, 0, 1, "d");
            if (d > 6) throw std::invalid_argument("hypercube: dimension > 6 exceeds the 64-vertex cap");
            Graph g(1 << d);
            for (int u = 0; u < (1 << d); u++)
                for (int b = 0; b < d; b++)
                    if (!(u >> b & 1)) g.add_edge(u, u | (1 << b));
            return g;
        }
        case Family::claw: {
            Graph g(4);
            g.add_edge(0, 1);
            g.add_edge(0, 2);
            g.add_edge(0, 3);
            return g;
        }
        case Family::boxminus: {
            if (!spec.g1 || !spec.g2)
                throw std::invalid_argument("boxminus family requires two component graphs");
            return boxminus(*spec.g1, *spec.g2, spec.bijection);
        }
    }
    throw std::invalid_argument("unknown family");
}

inline Graph make_family(Family f, std::initializer_list<int> params = {}) {
    return make_family(FamilySpec{f, std::vector<int>(params), {}, {}, {}});
}

inline std::vector<int> identity_permutation(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) p[static_cast<size_t>(i)] = i;
    return p;
}

}  // namespace thinness

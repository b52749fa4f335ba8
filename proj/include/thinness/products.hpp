#pragma once

#include <optional>
#include <string>

#include "thinness/families.hpp"
#include "thinness/graph.hpp"

namespace thinness {

enum class ProductKind {
    disjoint_union,
    join,
    lex_vertex,  // substitute G2 for a vertex of G1
    lex,
    cartesian,
    direct,
    strong,
    conormal,
    modular,
    homomorphic,
    hom,
};

inline std::string product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::disjoint_union: return "union";
        case ProductKind::join: return "join";
        case ProductKind::lex_vertex: return "lex_vertex";
        case ProductKind::lex: return "lex";
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::direct: return "direct";
        case ProductKind::strong: return "strong";
        case ProductKind::conormal: return "conormal";
        case ProductKind::modular: return "modular";
        case ProductKind::homomorphic: return "homomorphic";
        case ProductKind::hom: return "hom";
    }
    return "?";
}

inline std::optional<ProductKind> product_kind_from_name(const std::string& s) {
    for (ProductKind k : {ProductKind::disjoint_union, ProductKind::join, ProductKind::lex_vertex, ProductKind::lex,
                          ProductKind::cartesian, ProductKind::direct, ProductKind::strong, ProductKind::conormal,
                          ProductKind::modular, ProductKind::homomorphic, ProductKind::hom})
        if (product_kind_name(k) == s) return k;
    return std::nullopt;
}

// Vertex-set products label (i, j) as i*|V(G2)| + j. Union and join
// concatenate V1 then V2; lex_vertex splices V2 at the substituted vertex's
// position. Same-vertex pairs count as nonadjacent where a definition asks
// for nonadjacency (graphs are loopless).
inline Graph apply_product(ProductKind kind, const Graph& g1, const Graph& g2, int extra_vertex = -1) {
    const int n1 = g1.n(), n2 = g2.n();

    if (kind == ProductKind::disjoint_union || kind == ProductKind::join) {
        Graph g(n1 + n2);
        for (auto [u, v] : g1.edges()) g.add_edge(u, v);
        for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
        if (kind == ProductKind::join)
            for (int u = 0; u < n1; u++)
                for (int v = 0; v < n2; v++) g.add_edge(u, n1 + v);
        return g;
    }

    if (kind == ProductKind::lex_vertex) {
        if (extra_vertex < 0 || extra_vertex >= n1)
            throw std::invalid_argument("lex_vertex: substituted vertex out of range");
        const int v0 = extra_vertex;
        // old label x (x != v0) -> x if x < v0 else x + n2 - 1; G2's j -> v0 + j
        auto relabel = [&](int x) { return x < v0 ? x : x + n2 - 1; };
        Graph g(n1 - 1 + n2);
        for (auto [x, y] : g1.edges())
            if (x != v0 && y != v0) g.add_edge(relabel(x), relabel(y));
        for (auto [x, y] : g2.edges()) g.add_edge(v0 + x, v0 + y);
        for (int x = 0; x < n1; x++)
            if (x != v0 && g1.has_edge(x, v0))
                for (int j = 0; j < n2; j++) g.add_edge(relabel(x), v0 + j);
        return g;
    }

    if (n1 == 0 || n2 == 0) throw std::invalid_argument("vertex-set products need nonempty factors");

    Graph g(n1 * n2);
    for (int u1 = 0; u1 < n1; u1++)
        for (int u2 = 0; u2 < n2; u2++)
            for (int v1 = 0; v1 < n1; v1++)
                for (int v2 = 0; v2 < n2; v2++) {
                    int u = u1 * n2 + u2, v = v1 * n2 + v2;
                    if (u >= v) continue;
                    bool e1 = g1.has_edge(u1, v1), e2 = g2.has_edge(u2, v2);
                    bool adjacent = false;
                    switch (kind) {
                        case ProductKind::lex: adjacent = e1 || (u1 == v1 && e2); break;
                        case ProductKind::cartesian: adjacent = (u1 == v1 && e2) || (u2 == v2 && e1); break;
                        case ProductKind::direct: adjacent = e1 && e2; break;
                        case ProductKind::strong: adjacent = (u1 == v1 && e2) || (u2 == v2 && e1) || (e1 && e2); break;
                        case ProductKind::conormal: adjacent = e1 || e2; break;
                        case ProductKind::modular: adjacent = (e1 && e2) || (!e1 && !e2); break;
                        case ProductKind::homomorphic: adjacent = u1 == v1 || (e1 && !e2); break;
                        case ProductKind::hom: adjacent = u1 != v1 && (!e1 || e2); break;
                        default: break;
                    }
                    if (adjacent) g.add_edge(u, v);
                }
    return g;
}

}  // namespace thinness

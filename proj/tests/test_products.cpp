#include <catch2/catch_amalgamated.hpp>

#include "thinness/enumerate.hpp"
#include "thinness/families.hpp"
#include "thinness/products.hpp"

using namespace thinness;

TEST_CASE("small product identities from the definitions") {
    Graph k2 = make_family(Family::complete, {2});
    CHECK(isomorphic(apply_product(ProductKind::cartesian, k2, k2), make_family(Family::cycle, {4})));

    for (int n : {3, 4})
        CHECK(isomorphic(apply_product(ProductKind::direct, make_family(Family::complete, {n}), k2),
                         make_family(Family::crown, {n})));

    Graph two_k1(2);
    for (int t : {2, 3})
        CHECK(isomorphic(apply_product(ProductKind::conormal, make_family(Family::complete, {t}), two_k1),
                         make_family(Family::complement_matching, {t})));

    for (int n : {3, 4})
        CHECK(isomorphic(apply_product(ProductKind::modular, make_family(Family::complete, {n}), k2),
                         make_family(Family::crown, {n})));
    for (int t : {2, 3})
        CHECK(isomorphic(apply_product(ProductKind::modular, make_family(Family::matching, {t}), Graph(1)),
                         make_family(Family::complement_matching, {t})));

    // K_2 hom K_n = CR_n
    for (int n : {3, 4})
        CHECK(isomorphic(apply_product(ProductKind::hom, k2, make_family(Family::complete, {n})),
                         make_family(Family::crown, {n})));

    // K_n lex 2K_1 = complement of nK_2
    for (int n : {2, 3})
        CHECK(isomorphic(apply_product(ProductKind::lex, make_family(Family::complete, {n}), two_k1),
                         make_family(Family::complement_matching, {n})));
}

TEST_CASE("hom of K_1 is the complement, label for label") {
    for (const Graph& g : all_graphs_up_to_size(4))
        if (g.n() >= 1) CHECK(apply_product(ProductKind::hom, g, Graph(1)) == g.complement());
}

TEST_CASE("algebraic identities across the 3-vertex corpus") {
    auto corpus = all_graphs_up_to_size(3);
    for (const Graph& a : corpus)
        for (const Graph& b : corpus) {
            if (a.n() == 0 || b.n() == 0) continue;
            // complement(conormal) = strong of complements, label for label
            CHECK(apply_product(ProductKind::conormal, a, b).complement() ==
                  apply_product(ProductKind::strong, a.complement(), b.complement()));
            // hom = complement of homomorphic
            CHECK(apply_product(ProductKind::hom, a, b) ==
                  apply_product(ProductKind::homomorphic, a, b).complement());
            // strong = cartesian union direct (edge sets)
            Graph cart = apply_product(ProductKind::cartesian, a, b);
            Graph dir = apply_product(ProductKind::direct, a, b);
            Graph strong = apply_product(ProductKind::strong, a, b);
            Graph merged(cart.n());
            for (auto [u, v] : cart.edges()) merged.add_edge(u, v);
            for (auto [u, v] : dir.edges()) merged.add_edge(u, v);
            CHECK(strong == merged);
        }
}

TEST_CASE("strong product with a complete factor is the lexicographic product") {
    Graph k3 = make_family(Family::complete, {3});
    for (const Graph& g : all_graphs_up_to_size(3)) {
        if (g.n() == 0) continue;
        CHECK(apply_product(ProductKind::strong, g, k3) == apply_product(ProductKind::lex, g, k3));
    }
}

TEST_CASE("products distribute over union of the second factor") {
    Graph p3 = make_family(Family::path, {3});
    Graph h = make_family(Family::complete, {2});
    Graph h2 = make_family(Family::path, {3});
    Graph together = apply_product(ProductKind::disjoint_union, h, h2);
    for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong}) {
        Graph left = apply_product(kind, p3, together);
        Graph right = apply_product(ProductKind::disjoint_union, apply_product(kind, p3, h),
                                    apply_product(kind, p3, h2));
        CHECK(isomorphic(left, right));
    }
}

TEST_CASE("union and join labeling") {
    Graph k2 = make_family(Family::complete, {2});
    Graph e2(2);
    Graph u = apply_product(ProductKind::disjoint_union, k2, e2);
    CHECK(u.n() == 4);
    CHECK(u.has_edge(0, 1));
    CHECK(u.edge_count() == 1);

    Graph j = apply_product(ProductKind::join, e2, e2);  // 2K_1 join 2K_1 = C_4
    CHECK(isomorphic(j, make_family(Family::cycle, {4})));
}

TEST_CASE("lex_vertex splices the second graph in place") {
    // substituting K_2 for the middle of P_3 gives the paw-free diamond... P_4? no:
    // P_3 = 0-1-2, substitute at v=1 with 2K_1 gives C_4 minus an edge = P_4? check simple facts instead
    Graph p3 = make_family(Family::path, {3});
    Graph sub = apply_product(ProductKind::lex_vertex, p3, Graph(2), 1);
    CHECK(sub.n() == 4);
    // vertices 1,2 are the inserted stable pair; both see 0 and 3
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(0, 2));
    CHECK(sub.has_edge(1, 3));
    CHECK(sub.has_edge(2, 3));
    CHECK(!sub.has_edge(1, 2));
    CHECK(!sub.has_edge(0, 3));
    CHECK(isomorphic(sub, make_family(Family::cycle, {4})));

    CHECK_THROWS_AS(apply_product(ProductKind::lex_vertex, p3, Graph(2), 5), std::invalid_argument);
    CHECK_THROWS_AS(apply_product(ProductKind::lex_vertex, p3, Graph(2)), std::invalid_argument);
}

TEST_CASE("vertex-set products require nonempty factors") {
    CHECK_THROWS_AS(apply_product(ProductKind::cartesian, Graph(0), Graph(2)), std::invalid_argument);
    CHECK_THROWS_AS(apply_product(ProductKind::hom, Graph(2), Graph(0)), std::invalid_argument);
}

TEST_CASE("product vertex labeling is row-major in the second factor") {
    Graph p2 = make_family(Family::path, {2}), p3 = make_family(Family::path, {3});
    Graph g = apply_product(ProductKind::cartesian, p2, p3);
    // (i, j) -> i*3 + j; copy rows are paths
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 3));
    CHECK(g.has_edge(1, 4));
    CHECK(g.has_edge(2, 5));
    CHECK(!g.has_edge(0, 4));
}

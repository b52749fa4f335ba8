#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "thinness/coloring.hpp"
#include "thinness/enumerate.hpp"
#include "thinness/families.hpp"
#include "thinness/interval.hpp"
#include "thinness/ordering.hpp"

using namespace thinness;

namespace {
Graph path4() {
    // a-b-c-d as 0-1-2-3
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}
Graph cycle4() {
    // edges ab, bc, cd, da
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    return g;
}
}  // namespace

TEST_CASE("orderings and partitions validate") {
    CHECK_THROWS_AS(VertexOrdering({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 2}, 3), std::invalid_argument);  // class 1 empty
    VertexOrdering ord({2, 0, 1});
    CHECK(ord.position_of(2) == 0);
    CHECK(ord.reversed().order == std::vector<int>{1, 0, 2});
}

TEST_CASE("check_consistent on the spec instances") {
    // complement of 2K_2 with the nonadjacent-pairs partition: any order works
    Graph g = make_family(Family::complement_matching, {2});
    Partition pairs({0, 0, 1, 1}, 2);
    std::vector<int> perm{0, 1, 2, 3};
    do {
        CHECK(!check_consistent(g, VertexOrdering(perm), pairs, variant_thin).has_value());
    } while (std::next_permutation(perm.begin(), perm.end()));

    // P_4 in path order, single class, is consistent
    CHECK(!check_consistent(path4(), VertexOrdering::identity(4), Partition::single_class(4), variant_thin)
               .has_value());

    // C_4 in cyclic order, single class: first violation is (a, b, d) forward
    auto viol = check_consistent(cycle4(), VertexOrdering::identity(4), Partition::single_class(4), variant_thin);
    REQUIRE(viol.has_value());
    CHECK(viol->kind == ViolationKind::forward);
    CHECK(viol->r == 0);
    CHECK(viol->s == 1);
    CHECK(viol->t == 3);

    CHECK_THROWS_AS(
        check_consistent(cycle4(), VertexOrdering::identity(3), Partition::single_class(4), variant_thin),
        std::invalid_argument);
}

TEST_CASE("class constraints are enforced") {
    Graph k3 = make_family(Family::complete, {3});
    auto viol = check_consistent(k3, VertexOrdering::identity(3), Partition::single_class(3), variant_indthin);
    REQUIRE(viol.has_value());
    CHECK(viol->kind == ViolationKind::class_not_independent);
    CHECK(!check_consistent(k3, VertexOrdering::identity(3), Partition::single_class(3), variant_compthin)
               .has_value());
    auto viol2 = check_consistent(Graph(2), VertexOrdering::identity(2), Partition::single_class(2),
                                  variant_comppthin);
    REQUIRE(viol2.has_value());
    CHECK(viol2->kind == ViolationKind::class_not_complete);
}

TEST_CASE("incompatibility graphs on the spec instances") {
    // K_n: edgeless for any order
    for (int n : {2, 3, 4, 5}) {
        Graph kn = make_family(Family::complete, {n});
        CHECK(!incompatibility_graph(kn, VertexOrdering::identity(n), false).has_any_edge());
    }

    // P_4 in path order: both graphs edgeless
    CHECK(!incompatibility_graph(path4(), VertexOrdering::identity(4), false).has_any_edge());
    CHECK(!incompatibility_graph(path4(), VertexOrdering::identity(4), true).has_any_edge());

    // C_4 in cyclic order: G_< = {ab}, strong adds {cd}
    Graph weak = incompatibility_graph(cycle4(), VertexOrdering::identity(4), false);
    CHECK(weak.edge_count() == 1);
    CHECK(weak.has_edge(0, 1));
    Graph strong = incompatibility_graph(cycle4(), VertexOrdering::identity(4), true);
    CHECK(strong.edge_count() == 2);
    CHECK(strong.has_edge(0, 1));
    CHECK(strong.has_edge(2, 3));
}

TEST_CASE("variant conflict graphs") {
    Graph k3 = make_family(Family::complete, {3});
    CHECK(variant_conflict_graph(k3, VertexOrdering::identity(3), variant_indthin) == k3);

    Graph c4 = cycle4();
    Graph conflict = variant_conflict_graph(c4, VertexOrdering::identity(4), variant_thin);
    CHECK(conflict == incompatibility_graph(c4, VertexOrdering::identity(4), false));

    Graph e3(3);
    CHECK(variant_conflict_graph(e3, VertexOrdering::identity(3), variant_compthin) ==
          make_family(Family::complete, {3}));
}

TEST_CASE("consistency iff proper coloring of the conflict graph, exhaustively") {
    // every graph up to 5 vertices, every ordering, every 2-partition probe:
    // check_consistent == partition properly colors variant_conflict_graph
    for (const Graph& g : all_graphs_up_to_size(4)) {
        int n = g.n();
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) perm[static_cast<size_t>(i)] = i;
        do {
            VertexOrdering ord(perm);
            for (const Variant& variant : all_variants) {
                Graph conflict = variant_conflict_graph(g, ord, variant);
                // enumerate all partitions via restricted growth strings
                std::vector<int> cls(static_cast<size_t>(n), 0);
                std::function<void(int, int)> walk = [&](int idx, int used) {
                    if (idx == n) {
                        Partition part(cls, used);
                        bool consistent = !check_consistent(g, ord, part, variant).has_value();
                        bool proper = true;
                        for (auto [u, v] : conflict.edges())
                            if (cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)]) proper = false;
                        CHECK(consistent == proper);
                        return;
                    }
                    for (int c = 0; c <= std::min(idx, used); c++) {
                        cls[static_cast<size_t>(idx)] = c;
                        walk(idx + 1, std::max(used, c + 1));
                    }
                };
                if (n > 0) walk(1, 1);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("incompatibility graph structural properties on random orderings") {
    for (const Graph& g : all_graphs_up_to_iso(5)) {
        int n = g.n();
        for (int rot = 0; rot < n; rot++) {
            std::vector<int> perm(static_cast<size_t>(n));
            for (int i = 0; i < n; i++) perm[static_cast<size_t>(i)] = (i + rot) % n;
            VertexOrdering ord(perm);
            Graph weak = incompatibility_graph(g, ord, false);
            Graph strong = incompatibility_graph(g, ord, true);
            // E(G_<) subset of E(G~_<)
            for (auto [u, v] : weak.edges()) CHECK(strong.has_edge(u, v));
            // no edge at the last vertex of the ordering in G_<
            int last = ord.vertex_at(n - 1);
            CHECK(weak.degree(last) == 0);
            // strong consistency is symmetric under reversal
            Graph strong_rev = incompatibility_graph(g, ord.reversed(), true);
            CHECK(strong == strong_rev);
        }
    }
}

TEST_CASE("G_< is a co-comparability graph at small scale") {
    for (const Graph& g : all_graphs_up_to_iso(5)) {
        int n = g.n();
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) perm[static_cast<size_t>(i)] = i;
        do {
            CHECK(is_cocomparability(incompatibility_graph(g, VertexOrdering(perm), false)));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("witness json round-trip") {
    ThinWitness w(variant_indpthin, VertexOrdering({2, 0, 1}), Partition({0, 1, 0}, 2));
    ThinWitness back = witness_from_json(witness_to_json(w));
    CHECK(back.variant == w.variant);
    CHECK(back.ordering == w.ordering);
    CHECK(back.partition == w.partition);
    CHECK(back.value == 2);
}

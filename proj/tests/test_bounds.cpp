#include <catch2/catch_amalgamated.hpp>

#include "thinness/bounds.hpp"
#include "thinness/enumerate.hpp"
#include "thinness/families.hpp"
#include "thinness/solver.hpp"

using namespace thinness;

namespace {
Graph kn_square_kn(int n) {
    Graph k = make_family(Family::complete, {n});
    return apply_product(ProductKind::cartesian, k, k);
}
}  // namespace

TEST_CASE("neighborhood lower bound") {
    // complete graphs: every pair has empty difference
    CHECK(lb_neighborhood(make_family(Family::complete, {4})).value == 1);

    // thin(K_n square K_n) >= n via the pair bound, for n >= 3
    CHECK(lb_neighborhood(kn_square_kn(3)).value == 3);
    CHECK(lb_neighborhood(kn_square_kn(4)).value == 4);
    // at n = 2 the common-neighborhood hypothesis fails: diagonal pairs of C_4
    CHECK(lb_neighborhood(kn_square_kn(2)).value == 1);

    // hypercubes: distance-2 pairs share exactly two neighbors
    CHECK(lb_neighborhood(make_family(Family::hypercube, {4})).value == 3);
    CHECK(lb_neighborhood(make_family(Family::hypercube, {4})).value >= 4 - 2);

    // K_n square K_{n,n}
    Graph k2 = make_family(Family::complete, {2});
    for (int n : {2, 3}) {
        Graph g = apply_product(ProductKind::cartesian, make_family(Family::complete, {n}),
                                make_family(Family::complete_bipartite, {n}));
        CHECK(lb_neighborhood(g).value == n);
        CHECK(lb_neighborhood(g).value >= n - 1);
    }

    // strong-square of K_n square K_2: lemma numbers hold from n = 3 on
    Graph prism = apply_product(ProductKind::cartesian, make_family(Family::complete, {3}), k2);
    CHECK(lb_neighborhood(apply_product(ProductKind::strong, prism, prism)).value == 5);
    Graph c4 = apply_product(ProductKind::cartesian, k2, k2);
    CHECK(lb_neighborhood(apply_product(ProductKind::strong, c4, c4)).value == 3);

    CHECK_THROWS_AS(lb_neighborhood(Graph(1)), std::domain_error);
}

TEST_CASE("subset form of the neighborhood bound") {
    Graph g = kn_square_kn(3);
    // dropping one vertex keeps the pair minimum at 2: 1 + 2 + 8 - 9 = 2
    BoundCertificate c = lb_neighborhood(g, g.vertices() & ~bit(0));
    CHECK(c.applicable);
    CHECK(c.value == 2);
    CHECK(c.value <= exact_value(g, variant_thin).value);

    // complement of 3K_2 with one endpoint per pair: |V| - |S| too large
    Graph co3k2 = make_family(Family::complement_matching, {3});
    BoundCertificate na = lb_neighborhood(co3k2, bit(0) | bit(2) | bit(4));
    CHECK(!na.applicable);
    CHECK(na.value == 0);

    CHECK_THROWS_AS(lb_neighborhood(g, bit(0)), std::invalid_argument);
}

TEST_CASE("isoperimetric lower bound") {
    BoundCertificate k5 = lb_isoperimetric(make_family(Family::complete, {5}));
    CHECK(k5.value == 1);
    CHECK(k5.evidence["b_v"] == 4);

    BoundCertificate p4 = lb_isoperimetric(make_family(Family::path, {4}));
    CHECK(p4.evidence["b_v"] == 1);
    CHECK(p4.value == 1);

    // Chvatalova: b_v(GR_r) >= r
    for (int r : {2, 3}) {
        BoundCertificate c = lb_isoperimetric(make_family(Family::grid, {r}));
        CHECK(c.evidence["b_v"].get<int>() >= r);
    }

    CHECK_THROWS_AS(lb_isoperimetric(Graph(3)), std::domain_error);
    CHECK_THROWS_AS(lb_isoperimetric(make_family(Family::grid, {4})), CapExceeded);
}

TEST_CASE("boxminus lower bound") {
    Graph k3 = make_family(Family::complete, {3});
    BoundCertificate crown = lb_boxminus(k3, k3, identity_permutation(3));
    CHECK(crown.value == 2);
    CHECK(crown.value <= exact_value(make_family(Family::crown, {3}), variant_thin).value);

    // complement of 3K_2: certificate is sound but not tight
    BoundCertificate co = lb_boxminus(Graph(3), Graph(3), identity_permutation(3));
    CHECK(co.value == 2);
    CHECK(exact_value(make_family(Family::complement_matching, {3}), variant_thin).value == 3);

    // fat spider
    CHECK(lb_boxminus(make_family(Family::complete, {4}), Graph(4), identity_permutation(4)).value == 2);

    CHECK_THROWS_AS(lb_boxminus(Graph(2), Graph(3), identity_permutation(2)), std::invalid_argument);
}

TEST_CASE("upper bound suite emits the expected certificates") {
    Graph c4 = make_family(Family::cycle, {4});
    auto certs = ub_suite(c4);
    bool found_alpha = false, found_cocomp = false;
    for (const auto& c : certs) {
        if (c.theorem == "cor:thin-alpha" && c.applicable) {
            found_alpha = true;
            CHECK(c.value == 2);  // matches the exact value
        }
        if (c.theorem == "thm:cocomp-half" && c.applicable) {
            found_cocomp = true;
            CHECK(c.value == 2);
        }
    }
    CHECK(found_alpha);
    CHECK(found_cocomp);

    // co-comparability bound attained by complement of 3K_2
    auto co_certs = ub_suite(make_family(Family::complement_matching, {3}));
    for (const auto& c : co_certs)
        if (c.theorem == "thm:cocomp-half") {
            CHECK(c.applicable);
            CHECK(c.value == 3);
        }

    // complete graph: omega bound skipped, log bound trivially valid
    auto k5_certs = ub_suite(make_family(Family::complete, {5}));
    for (const auto& c : k5_certs) {
        if (c.theorem == "cor:thin-omega") CHECK(!c.applicable);
        if (c.theorem == "thm:n-log4") CHECK(c.value == static_cast<int>(std::floor(5 - std::log2(5.0) / 4)));
    }
}

TEST_CASE("bounds sandwich on the small corpus") {
    for (const Graph& g : all_graphs_up_to_size(5)) {
        if (g.n() == 0) continue;
        int thin = exact_value(g, variant_thin).value;
        int indthin = exact_value(g, variant_indthin).value;
        int compthin = exact_value(g, variant_compthin).value;
        for (const auto& c : ub_suite(g)) {
            if (!c.applicable) continue;
            int target = c.parameter == "indthin" ? indthin : c.parameter == "compthin" ? compthin : thin;
            CHECK(target <= c.value);
        }
        if (g.n() >= 2) CHECK(lb_neighborhood(g).value <= thin);
        if (g.has_any_edge()) CHECK(lb_isoperimetric(g).value <= thin);
    }
}

TEST_CASE("product lower bounds stay below exact values") {
    auto corpus = all_graphs_up_to_size(3);
    for (ProductKind kind : {ProductKind::cartesian, ProductKind::direct, ProductKind::strong,
                             ProductKind::conormal, ProductKind::modular, ProductKind::homomorphic,
                             ProductKind::hom, ProductKind::lex})
        for (const Graph& g1 : corpus)
            for (const Graph& g2 : corpus) {
                if (g1.n() == 0 || g2.n() == 0 || g1.n() * g2.n() > default_search_cap) continue;
                int exact = exact_value(apply_product(kind, g1, g2), variant_thin).value;
                for (const auto& c : lb_product_suite(kind, g1, g2))
                    if (c.applicable) CHECK(c.value <= exact);
            }
}

TEST_CASE("product lower bound spot values") {
    Graph k3 = make_family(Family::complete, {3});
    Graph k4 = make_family(Family::complete, {4});
    Graph k2 = make_family(Family::complete, {2});
    Graph e2(2);

    auto find = [](const std::vector<BoundCertificate>& certs, const std::string& theorem) {
        for (const auto& c : certs)
            if (c.theorem == theorem) return c;
        return BoundCertificate{};
    };

    CHECK(find(lb_product_suite(ProductKind::cartesian, k3, k3), "cor:lowercart2").value == 3);
    CHECK(find(lb_product_suite(ProductKind::conormal, k3, e2), "cor:lowerconorm").value == 3);
    CHECK(find(lb_product_suite(ProductKind::direct, k4, k2), "cor:lowerdirect").value == 2);

    // hypotheses recorded when they fail
    CHECK(!find(lb_product_suite(ProductKind::conormal, k3, k2), "cor:lowerconorm").applicable);
    CHECK(!find(lb_product_suite(ProductKind::direct, k3, e2), "cor:lowerdirect").applicable);
}

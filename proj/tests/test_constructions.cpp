#include <catch2/catch_amalgamated.hpp>

#include "thinness/constructions.hpp"
#include "thinness/enumerate.hpp"
#include "thinness/families.hpp"
#include "thinness/solver.hpp"

using namespace thinness;

namespace {
ThinWitness witness_for(const Graph& g, const Variant& v) { return exact_value(g, v).witness; }
}  // namespace

TEST_CASE("rule catalog covers the table") {
    auto rules = rule_catalog();

    // cartesian: one rule per variant, bound t1*n2
    int cart = 0;
    for (const auto& r : rules)
        if (r.kind == ProductKind::cartesian) {
            cart++;
            CHECK(r.formula.text() == "t1*n2");
        }
    CHECK(cart == 6);

    REQUIRE(find_rule("strong-complete/thin").has_value());
    CHECK(find_rule("strong-complete/thin")->equality);
    CHECK(find_rule("strong-complete/thin")->condition == "g2_complete");

    REQUIRE(find_rule("join/thin").has_value());
    CHECK(find_rule("join/thin")->equality);
    CHECK(find_rule("join/thin")->condition == "factors_not_complete");

    REQUIRE(find_rule("hom/thin").has_value());
    CHECK(find_rule("hom/thin")->formula.text() == "n1*t2");
    CHECK(!find_rule("nonexistent").has_value());
}

TEST_CASE("union rule takes the max of the factor witnesses") {
    Graph a = make_family(Family::complement_matching, {2});
    Graph b = make_family(Family::complement_matching, {3});
    Composition comp = compose_witness(*find_rule("union/thin"), a, witness_for(a, variant_thin), b,
                                       witness_for(b, variant_thin));
    CHECK(comp.witness.value == 3);
    CHECK(comp.nominal == 3);
    CHECK(exact_value(comp.product, variant_thin).value == 3);
}

TEST_CASE("join of two stable pairs gives the 4-cycle at two classes") {
    Graph e2(2);
    Composition comp = compose_witness(*find_rule("join/thin"), e2, witness_for(e2, variant_thin), e2,
                                       witness_for(e2, variant_thin));
    CHECK(comp.witness.value == 2);
    CHECK(isomorphic(comp.product, make_family(Family::cycle, {4})));
    CHECK(exact_value(comp.product, variant_thin).value == 2);
}

TEST_CASE("cartesian rule pins K_3 square K_3 at three classes") {
    Graph k3 = make_family(Family::complete, {3});
    Composition comp = compose_witness(*find_rule("cartesian/thin"), k3, witness_for(k3, variant_thin), k3,
                                       std::nullopt);
    CHECK(comp.witness.value == 3);
    CHECK(comp.nominal == 3);
    CHECK(exact_value(comp.product, variant_thin).value == 3);
}

TEST_CASE("hom rule on K_2 and K_3 upper-bounds the crown") {
    Graph k2 = make_family(Family::complete, {2});
    Graph k3 = make_family(Family::complete, {3});
    Composition comp = compose_witness(*find_rule("hom/thin"), k2, std::nullopt, k3,
                                       witness_for(k3, variant_indthin));
    CHECK(comp.nominal == 6);
    CHECK(comp.witness.value <= 6);
    CHECK(isomorphic(comp.product, make_family(Family::crown, {3})));
    CHECK(exact_value(comp.product, variant_thin).value == 2);  // witness is an upper bound, not tight
}

TEST_CASE("every rule self-certifies over the small pair corpus") {
    auto rules = rule_catalog();
    auto corpus = all_graphs_up_to_size(3);
    for (const auto& rule : rules) {
        for (const Graph& g1 : corpus)
            for (const Graph& g2 : corpus) {
                if (g1.n() == 0 || g2.n() == 0) continue;
                if (rule.condition == "g2_complete" && !g2.is_complete()) continue;
                std::optional<ThinWitness> w1, w2;
                if (rule.in1) w1 = witness_for(g1, *rule.in1);
                if (rule.in2) w2 = witness_for(g2, *rule.in2);
                int extra = rule.kind == ProductKind::lex_vertex ? g1.n() - 1 : -1;
                Composition comp = compose_witness(rule, g1, w1, g2, w2, extra);
                CHECK(comp.witness.value <= comp.nominal);
                CHECK(comp.witness.value >= 1);
                if (comp.product.n() <= default_search_cap) {
                    int exact = exact_value(comp.product, rule.out).value;
                    CHECK(exact <= comp.witness.value);
                    if (rule.equality && rule.condition.empty()) CHECK(exact == comp.nominal);
                }
            }
    }
}

TEST_CASE("equality rules hit the exact value under their conditions") {
    // join equality on two non-complete graphs
    Graph p3 = make_family(Family::path, {3});
    Graph c4 = make_family(Family::cycle, {4});
    Composition join = compose_witness(*find_rule("join/thin"), p3, witness_for(p3, variant_thin), c4,
                                       witness_for(c4, variant_thin));
    CHECK(exact_value(join.product, variant_thin).value == join.nominal);

    // lex and strong with a complete second factor keep the first factor's value
    Graph k2 = make_family(Family::complete, {2});
    for (const char* name : {"lex-complete/thin", "strong-complete/thin"}) {
        Composition comp = compose_witness(*find_rule(name), c4, witness_for(c4, variant_thin), k2, std::nullopt);
        CHECK(comp.nominal == 2);
        CHECK(exact_value(comp.product, variant_thin).value == 2);
    }

    // complete-G2 join keeps thin and compthin
    Composition jc = compose_witness(*find_rule("join-complete/thin"), c4, witness_for(c4, variant_thin), k2,
                                     std::nullopt);
    CHECK(exact_value(jc.product, variant_thin).value == 2);
}

TEST_CASE("lexv merged rule saves one class") {
    // C_4 has a 2-class independent witness; substituting P_3 at a vertex
    Graph c4 = make_family(Family::cycle, {4});
    Graph p3 = make_family(Family::path, {3});
    Composition merged = compose_witness(*find_rule("lexv-merged/thin"), c4, witness_for(c4, variant_indthin),
                                         p3, witness_for(p3, variant_thin), 2);
    CHECK(merged.nominal == 2 + 1 - 1);
    CHECK(merged.witness.value <= merged.nominal);
    CHECK(exact_value(merged.product, variant_thin).value <= merged.witness.value);
}

TEST_CASE("component-wise composition respects the largest component") {
    Graph p3 = make_family(Family::path, {3});
    Graph two_comps = apply_product(ProductKind::disjoint_union, make_family(Family::path, {3}),
                                    make_family(Family::complete, {2}));
    auto rule = *find_rule("cartesian/thin");
    Composition whole = compose_witness(rule, p3, witness_for(p3, variant_thin), two_comps, std::nullopt);
    Composition parts = compose_over_components(rule, p3, witness_for(p3, variant_thin), two_comps);
    CHECK(parts.product == whole.product);
    CHECK(parts.witness.value <= 1 * 3);  // t1 * largest component
    CHECK(parts.witness.value <= whole.witness.value);
}

TEST_CASE("homogeneous sets and the contraction bound") {
    // the two nonadjacent diagonals of C_4 are homogeneous
    Graph c4 = make_family(Family::cycle, {4});
    auto sets = homogeneous_sets(c4);
    CHECK(std::find(sets.begin(), sets.end(), bit(0) | bit(2)) != sets.end());

    for (const Graph& g : all_graphs_up_to_iso(5)) {
        int whole = exact_value(g, variant_thin).value;
        for (VertexSet h : homogeneous_sets(g)) {
            int inner = exact_value(g.induced(h), variant_thin).value;
            int outer = exact_value(contract_set(g, h), variant_thin).value;
            CHECK(whole <= inner + outer);
        }
    }
}

TEST_CASE("error paths") {
    Graph k3 = make_family(Family::complete, {3});
    Graph e2(2);

    // wrong variant for the rule
    CHECK_THROWS_AS(compose_witness(*find_rule("direct/thin"), k3, witness_for(k3, variant_thin), e2,
                                    std::nullopt),
                    std::invalid_argument);

    // corrupted factor witness
    ThinWitness bad(variant_thin, VertexOrdering::identity(4), Partition::single_class(4));
    Graph c4 = make_family(Family::cycle, {4});
    CHECK_THROWS_AS(compose_witness(*find_rule("union/thin"), c4, bad, c4, witness_for(c4, variant_thin)),
                    CertificationError);

    // missing substitution vertex
    CHECK_THROWS_AS(compose_witness(*find_rule("lexv/thin"), k3, witness_for(k3, variant_thin), e2,
                                    witness_for(e2, variant_thin)),
                    std::invalid_argument);

    // complete-G2 rule on a non-complete factor
    CHECK_THROWS_AS(compose_witness(*find_rule("lex-complete/thin"), k3, witness_for(k3, variant_thin), e2,
                                    std::nullopt),
                    std::invalid_argument);
}

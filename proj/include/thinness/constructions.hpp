#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thinness/graph.hpp"
#include "thinness/ordering.hpp"
#include "thinness/products.hpp"

namespace thinness {

// Nominal class count of a composition, over the factor witness sizes t1, t2
// and the factor orders n1, n2.
struct BoundFormula {
    enum class Kind { max_t1_t2, sum_t1_t2, sum_minus_one, prod_t1_t2, t1_times_n2, n1_times_t2, t1_only };
    Kind kind;

    int eval(int t1, int t2, int n1, int n2) const {
        switch (kind) {
            case Kind::max_t1_t2: return std::max(t1, t2);
            case Kind::sum_t1_t2: return t1 + t2;
            case Kind::sum_minus_one: return t1 + t2 - 1;
            case Kind::prod_t1_t2: return t1 * t2;
            case Kind::t1_times_n2: return t1 * n2;
            case Kind::n1_times_t2: return n1 * t2;
            case Kind::t1_only: return t1;
        }
        return 0;
    }

    std::string text() const {
        switch (kind) {
            case Kind::max_t1_t2: return "max(t1,t2)";
            case Kind::sum_t1_t2: return "t1+t2";
            case Kind::sum_minus_one: return "t1+t2-1";
            case Kind::prod_t1_t2: return "t1*t2";
            case Kind::t1_times_n2: return "t1*n2";
            case Kind::n1_times_t2: return "n1*t2";
            case Kind::t1_only: return "t1";
        }
        return "?";
    }
};

// The ordering/partition recipe a proof prescribes for the product witness.
enum class Recipe {
    union_merge,             // concatenated order, classes merged index-wise (max law)
    union_concat,            // concatenated order, disjoint classes (sum law)
    join_concat,             // same shape as union_concat, on the join
    join_into_first,         // complete G2 folded into the first class of G1
    lexv_plain,              // splice, disjoint classes
    lexv_merged,             // splice, V_2^1 merged into the substituted vertex's class
    lexv_complete,           // splice, all of complete G2 into the substituted vertex's class
    product_class1_by_pos2,  // lexicographic order, class (class1, position in V2)
    product_class1_class2,   // lexicographic order, class (class1, class2)
    product_pos1_class2,     // lexicographic order, class (vertex of V1, class2)
    product_pos1_class2_rev, // order lexicographic in (V2, V1), class (vertex of V1, class2)
    product_class1_only,     // lexicographic order, class = class1 (complete G2 blow-up)
};

struct CompositionRule {
    std::string name;     // "<kind or case>/<variant_out>"
    std::string theorem;  // theorem anchor the rule realizes
    ProductKind kind;
    Variant out;
    std::optional<Variant> in1, in2;  // factor witness requirements; nullopt = ordering only
    BoundFormula formula;
    Recipe recipe;
    bool equality = false;     // flagged equality row (under `condition`)
    std::string condition;     // "", "g2_complete", or "factors_not_complete"
};

inline std::vector<CompositionRule> rule_catalog() {
    using K = BoundFormula::Kind;
    std::vector<CompositionRule> rules;
    auto add = [&](std::string name, std::string theorem, ProductKind kind, Variant out,
                   std::optional<Variant> in1, std::optional<Variant> in2, K formula, Recipe recipe, bool equality,
                   std::string condition = "") {
        rules.push_back(CompositionRule{std::move(name), std::move(theorem), kind, out, in1, in2,
                                        BoundFormula{formula}, recipe, equality, std::move(condition)});
    };

    // union: max law for thin/pthin (thm:union) and ind variants (thm:union-ind),
    // sum law for comp variants (thm:union-comp); all equalities
    for (Variant v : {variant_thin, variant_pthin})
        add("union/" + variant_name(v), "thm:union", ProductKind::disjoint_union, v, v, v, K::max_t1_t2,
            Recipe::union_merge, true);
    for (Variant v : {variant_indthin, variant_indpthin})
        add("union/" + variant_name(v), "thm:union-ind", ProductKind::disjoint_union, v, v, v, K::max_t1_t2,
            Recipe::union_merge, true);
    for (Variant v : {variant_compthin, variant_comppthin})
        add("union/" + variant_name(v), "thm:union-comp", ProductKind::disjoint_union, v, v, v, K::sum_t1_t2,
            Recipe::union_concat, true);

    // join: sums; thin is an equality when neither factor is complete (thm:join2),
    // ind variants unconditionally (thm:join-ind)
    add("join/thin", "thm:join2", ProductKind::join, variant_thin, variant_thin, variant_thin, K::sum_t1_t2,
        Recipe::join_concat, true, "factors_not_complete");
    add("join/pthin", "thm:join", ProductKind::join, variant_pthin, variant_pthin, variant_pthin, K::sum_t1_t2,
        Recipe::join_concat, false);
    for (Variant v : {variant_indthin, variant_indpthin})
        add("join/" + variant_name(v), "thm:join-ind", ProductKind::join, v, v, v, K::sum_t1_t2,
            Recipe::join_concat, true);
    for (Variant v : {variant_compthin, variant_comppthin})
        add("join/" + variant_name(v), "thm:join-comp", ProductKind::join, v, v, v, K::sum_t1_t2,
            Recipe::join_concat, false);
    add("join-complete/thin", "thm:join", ProductKind::join, variant_thin, variant_thin, std::nullopt, K::t1_only,
        Recipe::join_into_first, true, "g2_complete");
    add("join-complete/compthin", "thm:join-comp", ProductKind::join, variant_compthin, variant_compthin,
        std::nullopt, K::t1_only, Recipe::join_into_first, true, "g2_complete");

    // lexicographic product over a vertex (thm:lexv)
    for (Variant v : {variant_thin, variant_pthin, variant_compthin, variant_comppthin})
        add("lexv/" + variant_name(v), "thm:lexv", ProductKind::lex_vertex, v, v, v, K::sum_t1_t2,
            Recipe::lexv_plain, false);
    add("lexv-merged/thin", "thm:lexv", ProductKind::lex_vertex, variant_thin, variant_indthin, variant_thin,
        K::sum_minus_one, Recipe::lexv_merged, false);
    add("lexv-merged/indthin", "thm:lexv", ProductKind::lex_vertex, variant_indthin, variant_indthin,
        variant_indthin, K::sum_minus_one, Recipe::lexv_merged, false);
    add("lexv-merged/pthin", "thm:lexv", ProductKind::lex_vertex, variant_pthin, variant_indpthin, variant_pthin,
        K::sum_minus_one, Recipe::lexv_merged, false);
    add("lexv-merged/indpthin", "thm:lexv", ProductKind::lex_vertex, variant_indpthin, variant_indpthin,
        variant_indpthin, K::sum_minus_one, Recipe::lexv_merged, false);
    for (Variant v : {variant_thin, variant_pthin, variant_compthin, variant_comppthin})
        add("lexv-complete/" + variant_name(v), "thm:lexv", ProductKind::lex_vertex, v, v, std::nullopt,
            K::t1_only, Recipe::lexv_complete, true, "g2_complete");

    // lexicographic product (thm:lex)
    for (Variant v : {variant_thin, variant_pthin, variant_compthin, variant_comppthin})
        add("lex-complete/" + variant_name(v), "thm:lex", ProductKind::lex, v, v, std::nullopt, K::t1_only,
            Recipe::product_class1_only, true, "g2_complete");
    add("lex/thin", "thm:lex", ProductKind::lex, variant_thin, variant_indthin, variant_thin, K::prod_t1_t2,
        Recipe::product_class1_class2, false);
    add("lex/indthin", "thm:lex", ProductKind::lex, variant_indthin, variant_indthin, variant_indthin,
        K::prod_t1_t2, Recipe::product_class1_class2, false);
    add("lex/pthin", "thm:lex", ProductKind::lex, variant_pthin, variant_indpthin, variant_pthin, K::prod_t1_t2,
        Recipe::product_class1_class2, false);
    add("lex/indpthin", "thm:lex", ProductKind::lex, variant_indpthin, variant_indpthin, variant_indpthin,
        K::prod_t1_t2, Recipe::product_class1_class2, false);
    add("lex/compthin", "thm:lex", ProductKind::lex, variant_compthin, std::nullopt, variant_compthin,
        K::n1_times_t2, Recipe::product_pos1_class2, false);
    add("lex/comppthin", "thm:lex", ProductKind::lex, variant_comppthin, std::nullopt, variant_comppthin,
        K::n1_times_t2, Recipe::product_pos1_class2, false);

    // Cartesian product: all six variants (thm:cart, rem:cart)
    for (Variant v : all_variants)
        add("cartesian/" + variant_name(v), "thm:cart", ProductKind::cartesian, v, v, std::nullopt,
            K::t1_times_n2, Recipe::product_class1_by_pos2, false);

    // direct product: independent witnesses transfer (thm:direct)
    add("direct/thin", "thm:direct", ProductKind::direct, variant_thin, variant_indthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("direct/indthin", "thm:direct", ProductKind::direct, variant_indthin, variant_indthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("direct/pthin", "thm:direct", ProductKind::direct, variant_pthin, variant_indpthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("direct/indpthin", "thm:direct", ProductKind::direct, variant_indpthin, variant_indpthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);

    // strong product: all six, plus complete-G2 equalities (thm:strong)
    for (Variant v : all_variants)
        add("strong/" + variant_name(v), "thm:strong", ProductKind::strong, v, v, std::nullopt, K::t1_times_n2,
            Recipe::product_class1_by_pos2, false);
    for (Variant v : {variant_thin, variant_pthin, variant_compthin, variant_comppthin})
        add("strong-complete/" + variant_name(v), "thm:strong", ProductKind::strong, v, v, std::nullopt,
            K::t1_only, Recipe::product_class1_only, true, "g2_complete");

    // co-normal product (thm:conorm)
    add("conormal/thin", "thm:conorm", ProductKind::conormal, variant_thin, variant_indthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("conormal/indthin", "thm:conorm", ProductKind::conormal, variant_indthin, variant_indthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("conormal/pthin", "thm:conorm", ProductKind::conormal, variant_pthin, variant_indpthin, std::nullopt,
        K::t1_times_n2, Recipe::product_class1_by_pos2, false);
    add("conormal/indpthin", "thm:conorm", ProductKind::conormal, variant_indpthin, variant_indpthin,
        std::nullopt, K::t1_times_n2, Recipe::product_class1_by_pos2, false);

    // homomorphic product: all six (thm:homo)
    for (Variant v : all_variants)
        add("homomorphic/" + variant_name(v), "thm:homo", ProductKind::homomorphic, v, v, std::nullopt,
            K::t1_times_n2, Recipe::product_class1_by_pos2, false);

    // hom-product: the second factor's independent witness drives (thm:hom)
    add("hom/thin", "thm:hom", ProductKind::hom, variant_thin, std::nullopt, variant_indthin, K::n1_times_t2,
        Recipe::product_pos1_class2_rev, false);
    add("hom/indthin", "thm:hom", ProductKind::hom, variant_indthin, std::nullopt, variant_indthin,
        K::n1_times_t2, Recipe::product_pos1_class2_rev, false);
    add("hom/pthin", "thm:hom", ProductKind::hom, variant_pthin, std::nullopt, variant_indpthin, K::n1_times_t2,
        Recipe::product_pos1_class2_rev, false);
    add("hom/indpthin", "thm:hom", ProductKind::hom, variant_indpthin, std::nullopt, variant_indpthin,
        K::n1_times_t2, Recipe::product_pos1_class2_rev, false);

    return rules;
}

inline std::optional<CompositionRule> find_rule(const std::string& name) {
    for (CompositionRule& r : rule_catalog())
        if (r.name == name) return r;
    return std::nullopt;
}

struct Composition {
    Graph product;
    ThinWitness witness;
    int nominal = 0;  // formula value; witness.value <= nominal (empty classes compact away)
};

// Thrown when a factor witness does not certify what a rule requires.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline ThinWitness factor_witness(const Graph& g, const std::optional<Variant>& required,
                                  const std::optional<ThinWitness>& provided, const char* which) {
    if (!required) {
        // only an ordering is consumed; take the provided one or the identity
        VertexOrdering ord = provided ? provided->ordering : VertexOrdering::identity(g.n());
        if (ord.n() != g.n()) throw std::invalid_argument(std::string(which) + ": ordering size mismatch");
        return ThinWitness(variant_thin, std::move(ord), Partition::single_class(g.n()));
    }
    if (!provided) throw std::invalid_argument(std::string(which) + ": rule requires a witness");
    if (!(provided->variant == *required))
        throw std::invalid_argument(std::string(which) + ": rule requires a " + variant_name(*required) +
                                    " witness, got " + variant_name(provided->variant));
    if (provided->ordering.n() != g.n())
        throw std::invalid_argument(std::string(which) + ": witness size mismatch");
    if (auto viol = provided->verify(g))
        throw CertificationError(std::string(which) + ": factor witness fails verification (" +
                                 violation_kind_name(viol->kind) + ")");
    return *provided;
}

}  // namespace detail

// Builds the product graph and a verified witness for it following the rule's
// proof recipe. The returned witness always passes check_consistent (that is
// re-checked here); its class count is at most the formula value.
inline Composition compose_witness(const CompositionRule& rule, const Graph& g1,
                                   const std::optional<ThinWitness>& w1_in, const Graph& g2,
                                   const std::optional<ThinWitness>& w2_in, int extra_vertex = -1) {
    if (g1.n() == 0 || g2.n() == 0) throw std::invalid_argument(rule.name + ": factors must be nonempty");
    if (rule.condition == "g2_complete" && !g2.is_complete())
        throw std::invalid_argument(rule.name + ": rule needs a complete second factor");

    ThinWitness w1 = detail::factor_witness(g1, rule.in1, w1_in, "w1");
    ThinWitness w2 = detail::factor_witness(g2, rule.in2, w2_in, "w2");
    const int n1 = g1.n(), n2 = g2.n();
    const int t1 = rule.in1 ? w1.value : n1 > 0 ? 1 : 0;
    const int t2 = rule.in2 ? w2.value : n2 > 0 ? 1 : 0;

    Graph product = apply_product(rule.kind, g1, g2, extra_vertex);

    std::vector<int> order;
    std::vector<int> labels(static_cast<size_t>(product.n()), 0);
    auto c1 = [&](int v) { return w1.partition.class_of[static_cast<size_t>(v)]; };
    auto c2 = [&](int w) { return w2.partition.class_of[static_cast<size_t>(w)]; };

    switch (rule.recipe) {
        case Recipe::union_merge:
        case Recipe::union_concat:
        case Recipe::join_concat:
        case Recipe::join_into_first: {
            for (int i = 0; i < n1; i++) order.push_back(w1.ordering.vertex_at(i));
            for (int j = 0; j < n2; j++) order.push_back(n1 + w2.ordering.vertex_at(j));
            for (int v = 0; v < n1; v++) labels[static_cast<size_t>(v)] = c1(v);
            for (int w = 0; w < n2; w++) {
                int c;
                if (rule.recipe == Recipe::union_merge) c = c2(w);
                else if (rule.recipe == Recipe::join_into_first) c = 0;
                else c = t1 + c2(w);
                labels[static_cast<size_t>(n1 + w)] = c;
            }
            break;
        }
        case Recipe::lexv_plain:
        case Recipe::lexv_merged:
        case Recipe::lexv_complete: {
            const int v0 = extra_vertex;
            auto relabel = [&](int x) { return x < v0 ? x : x + n2 - 1; };
            for (int i = 0; i < n1; i++) {
                int x = w1.ordering.vertex_at(i);
                if (x == v0)
                    for (int j = 0; j < n2; j++) order.push_back(v0 + w2.ordering.vertex_at(j));
                else
                    order.push_back(relabel(x));
            }
            for (int x = 0; x < n1; x++)
                if (x != v0) labels[static_cast<size_t>(relabel(x))] = c1(x);
            for (int j = 0; j < n2; j++) {
                int c;
                if (rule.recipe == Recipe::lexv_plain) c = t1 + c2(j);
                else if (rule.recipe == Recipe::lexv_complete) c = c1(v0);
                else c = c2(j) == 0 ? c1(v0) : t1 + c2(j) - 1;
                labels[static_cast<size_t>(v0 + j)] = c;
            }
            break;
        }
        case Recipe::product_class1_by_pos2:
        case Recipe::product_class1_class2:
        case Recipe::product_pos1_class2:
        case Recipe::product_class1_only: {
            for (int p1 = 0; p1 < n1; p1++)
                for (int p2 = 0; p2 < n2; p2++)
                    order.push_back(w1.ordering.vertex_at(p1) * n2 + w2.ordering.vertex_at(p2));
            for (int v = 0; v < n1; v++)
                for (int w = 0; w < n2; w++) {
                    int c;
                    if (rule.recipe == Recipe::product_class1_by_pos2)
                        c = c1(v) * n2 + w2.ordering.position_of(w);
                    else if (rule.recipe == Recipe::product_class1_class2)
                        c = c1(v) * t2 + c2(w);
                    else if (rule.recipe == Recipe::product_pos1_class2)
                        c = w1.ordering.position_of(v) * t2 + c2(w);
                    else
                        c = c1(v);
                    labels[static_cast<size_t>(v * n2 + w)] = c;
                }
            break;
        }
        case Recipe::product_pos1_class2_rev: {
            for (int p2 = 0; p2 < n2; p2++)
                for (int p1 = 0; p1 < n1; p1++)
                    order.push_back(w1.ordering.vertex_at(p1) * n2 + w2.ordering.vertex_at(p2));
            for (int v = 0; v < n1; v++)
                for (int w = 0; w < n2; w++)
                    labels[static_cast<size_t>(v * n2 + w)] = w1.ordering.position_of(v) * t2 + c2(w);
            break;
        }
    }

    ThinWitness witness(rule.out, VertexOrdering(std::move(order)), Partition::from_labels(labels));
    if (auto viol = witness.verify(product))
        throw CertificationError(rule.name + ": composed witness failed verification (" +
                                 violation_kind_name(viol->kind) + " at t=" + std::to_string(viol->t) + ")");

    Composition out;
    out.nominal = rule.formula.eval(t1, t2, n1, n2);
    out.product = std::move(product);
    out.witness = std::move(witness);
    return out;
}

// The component-strengthened form for cartesian/direct/strong: compose
// against each connected component of G2 and chain the per-component
// witnesses with the applicable union law. Class count stays within
// t1 * (largest component) for max-law variants.
inline Composition compose_over_components(const CompositionRule& rule, const Graph& g1,
                                           const std::optional<ThinWitness>& w1, const Graph& g2) {
    if (rule.kind != ProductKind::cartesian && rule.kind != ProductKind::direct &&
        rule.kind != ProductKind::strong)
        throw std::invalid_argument("compose_over_components: cartesian/direct/strong only");

    Graph product = apply_product(rule.kind, g1, g2);
    auto comps = g2.components();
    bool sum_law = rule.out.class_constraint == ClassConstraint::complete;

    std::vector<int> order;
    std::vector<int> labels(static_cast<size_t>(product.n()), 0);
    int used = 0;
    for (const auto& comp : comps) {
        Composition part = compose_witness(rule, g1, w1, g2.induced(comp), std::nullopt);
        // component-local product label (i, idx) is i*|comp| + idx; global is i*n2 + comp[idx]
        auto global = [&](int local) {
            int i = local / static_cast<int>(comp.size());
            int idx = local % static_cast<int>(comp.size());
            return i * g2.n() + comp[static_cast<size_t>(idx)];
        };
        for (int p = 0; p < part.product.n(); p++) order.push_back(global(part.witness.ordering.vertex_at(p)));
        for (int local = 0; local < part.product.n(); local++) {
            int c = part.witness.partition.class_of[static_cast<size_t>(local)];
            labels[static_cast<size_t>(global(local))] = sum_law ? used + c : c;
        }
        if (sum_law) used += part.witness.value;
    }

    ThinWitness witness(rule.out, VertexOrdering(std::move(order)), Partition::from_labels(labels));
    if (auto viol = witness.verify(product))
        throw CertificationError("compose_over_components: witness failed verification (" +
                                 violation_kind_name(viol->kind) + ")");
    Composition out;
    out.nominal = witness.value;
    out.product = std::move(product);
    out.witness = std::move(witness);
    return out;
}

// Proper homogeneous sets (2 <= |X| < n, outside vertices see all or none of
// X), exhaustive; deterministic ascending mask order.
inline std::vector<VertexSet> homogeneous_sets(const Graph& g, int cap = 10) {
    if (g.n() > cap)
        throw CapExceeded("homogeneous_sets: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(cap));
    std::vector<VertexSet> out;
    for (VertexSet x = 1; x <= g.vertices(); x++) {
        int size = popcount(x);
        if (size < 2 || size >= g.n()) continue;
        bool homogeneous = true;
        for (int v = 0; v < g.n() && homogeneous; v++) {
            if (x & bit(v)) continue;
            VertexSet seen = g.neighbors(v) & x;
            if (seen != 0 && seen != x) homogeneous = false;
        }
        if (homogeneous) out.push_back(x);
    }
    return out;
}

// Contract a homogeneous set to its lowest vertex.
inline Graph contract_set(const Graph& g, VertexSet x) {
    int rep = lowest(x);
    VertexSet keep = (g.vertices() & ~x) | bit(rep);
    std::vector<int> verts = set_to_vector(keep);
    Graph out(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); i++)
        for (size_t j = i + 1; j < verts.size(); j++) {
            int u = verts[i], v = verts[j];
            bool edge;
            if (u == rep) edge = (g.neighbors(v) & x) != 0;
            else if (v == rep) edge = (g.neighbors(u) & x) != 0;
            else edge = g.has_edge(u, v);
            if (edge) out.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return out;
}

}  // namespace thinness

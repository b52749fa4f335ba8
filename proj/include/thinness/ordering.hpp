#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinness/graph.hpp"

namespace thinness {

// Permutation of [0, n): order[i] is the vertex at position i.
struct VertexOrdering {
    std::vector<int> order;
    std::vector<int> pos;  // inverse: pos[order[i]] = i

    VertexOrdering() = default;

    explicit VertexOrdering(std::vector<int> o) : order(std::move(o)) {
        int n = static_cast<int>(order.size());
        pos.assign(static_cast<size_t>(n), -1);
        for (int i = 0; i < n; i++) {
            int v = order[static_cast<size_t>(i)];
            if (v < 0 || v >= n || pos[static_cast<size_t>(v)] != -1)
                throw std::invalid_argument("ordering is not a permutation of [0, n)");
            pos[static_cast<size_t>(v)] = i;
        }
    }

    static VertexOrdering identity(int n) {
        std::vector<int> o(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) o[static_cast<size_t>(i)] = i;
        return VertexOrdering(std::move(o));
    }

    int n() const { return static_cast<int>(order.size()); }
    int vertex_at(int position) const { return order[static_cast<size_t>(position)]; }
    int position_of(int vertex) const { return pos[static_cast<size_t>(vertex)]; }

    VertexOrdering reversed() const {
        std::vector<int> o(order.rbegin(), order.rend());
        return VertexOrdering(std::move(o));
    }

    bool operator==(const VertexOrdering& other) const { return order == other.order; }
};

// Assignment of each vertex to a class index in [0, k); every class nonempty.
struct Partition {
    std::vector<int> class_of;
    int k = 0;

    Partition() = default;

    Partition(std::vector<int> classes, int k_) : class_of(std::move(classes)), k(k_) {
        std::vector<bool> used(static_cast<size_t>(k), false);
        for (int c : class_of) {
            if (c < 0 || c >= k) throw std::invalid_argument("partition class index out of range");
            used[static_cast<size_t>(c)] = true;
        }
        for (bool u : used)
            if (!u) throw std::invalid_argument("partition has an empty class");
    }

    // Builds from raw labels, compacting class ids to 0..k-1 by first appearance.
    static Partition from_labels(const std::vector<int>& labels) {
        std::vector<int> remap;
        std::vector<int> out(labels.size());
        for (size_t i = 0; i < labels.size(); i++) {
            int c = labels[i];
            int found = -1;
            for (size_t j = 0; j < remap.size(); j++)
                if (remap[j] == c) found = static_cast<int>(j);
            if (found < 0) {
                found = static_cast<int>(remap.size());
                remap.push_back(c);
            }
            out[i] = found;
        }
        return Partition(std::move(out), static_cast<int>(remap.size()));
    }

    static Partition singletons(int n) {
        std::vector<int> c(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) c[static_cast<size_t>(i)] = i;
        return Partition(std::move(c), n);
    }

    static Partition single_class(int n) { return Partition(std::vector<int>(static_cast<size_t>(n), 0), n > 0 ? 1 : 0); }

    int n() const { return static_cast<int>(class_of.size()); }

    std::vector<VertexSet> classes() const {
        std::vector<VertexSet> out(static_cast<size_t>(k), 0);
        for (int v = 0; v < n(); v++) out[static_cast<size_t>(class_of[static_cast<size_t>(v)])] |= bit(v);
        return out;
    }

    bool operator==(const Partition& other) const = default;
};

enum class ClassConstraint { none, independent, complete };

// One of the six thinness variants: proper toggles strong consistency,
// class_constraint restricts what the classes may be.
struct Variant {
    bool proper = false;
    ClassConstraint class_constraint = ClassConstraint::none;

    bool operator==(const Variant& other) const = default;
};

inline constexpr Variant variant_thin{false, ClassConstraint::none};
inline constexpr Variant variant_pthin{true, ClassConstraint::none};
inline constexpr Variant variant_indthin{false, ClassConstraint::independent};
inline constexpr Variant variant_indpthin{true, ClassConstraint::independent};
inline constexpr Variant variant_compthin{false, ClassConstraint::complete};
inline constexpr Variant variant_comppthin{true, ClassConstraint::complete};

inline constexpr std::array<Variant, 6> all_variants{variant_thin,     variant_pthin,    variant_indthin,
                                                     variant_indpthin, variant_compthin, variant_comppthin};

inline std::string variant_name(const Variant& v) {
    std::string base;
    switch (v.class_constraint) {
        case ClassConstraint::none: base = "thin"; break;
        case ClassConstraint::independent: base = "indthin"; break;
        case ClassConstraint::complete: base = "compthin"; break;
    }
    if (v.proper) base.insert(base.size() - 4, "p");
    return base;
}

inline std::optional<Variant> variant_from_name(const std::string& s) {
    for (const Variant& v : all_variants)
        if (variant_name(v) == s) return v;
    return std::nullopt;
}

inline std::string class_constraint_name(ClassConstraint c) {
    switch (c) {
        case ClassConstraint::none: return "none";
        case ClassConstraint::independent: return "independent";
        case ClassConstraint::complete: return "complete";
    }
    return "?";
}

enum class ViolationKind { forward, backward, class_not_independent, class_not_complete };

// Positions (r, s, t), r < s < t, witnessing a failed consistency triple;
// for class-constraint violations only r and s are meaningful (t = -1).
struct ConsistencyViolation {
    ViolationKind kind;
    int r = -1, s = -1, t = -1;
};

inline std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::forward: return "forward";
        case ViolationKind::backward: return "backward";
        case ViolationKind::class_not_independent: return "class_not_independent";
        case ViolationKind::class_not_complete: return "class_not_complete";
    }
    return "?";
}

// Consistency of (ordering, partition) for the variant. Returns nullopt when
// consistent (strongly consistent if proper) and all classes satisfy the
// class constraint; otherwise the first violation scanning triples in
// (t, s, r) lexicographic order (forward checked before backward at equal
// triples), then class constraints scanning pairs by (s, r).
inline std::optional<ConsistencyViolation> check_consistent(const Graph& g, const VertexOrdering& ord,
                                                            const Partition& part, const Variant& variant) {
    int n = g.n();
    if (ord.n() != n || part.n() != n)
        throw std::invalid_argument("check_consistent: ordering/partition size mismatch with graph");

    auto cls = [&](int position) { return part.class_of[static_cast<size_t>(ord.vertex_at(position))]; };

    for (int t = 2; t < n; t++) {
        int vt = ord.vertex_at(t);
        for (int s = 1; s < t; s++) {
            int vs = ord.vertex_at(s);
            for (int r = 0; r < s; r++) {
                int vr = ord.vertex_at(r);
                if (cls(r) == cls(s) && g.has_edge(vt, vr) && !g.has_edge(vt, vs))
                    return ConsistencyViolation{ViolationKind::forward, r, s, t};
                if (variant.proper && cls(s) == cls(t) && g.has_edge(vt, vr) && !g.has_edge(vs, vr))
                    return ConsistencyViolation{ViolationKind::backward, r, s, t};
            }
        }
    }

    if (variant.class_constraint != ClassConstraint::none) {
        bool want_edge = variant.class_constraint == ClassConstraint::complete;
        for (int s = 1; s < n; s++)
            for (int r = 0; r < s; r++) {
                if (cls(r) != cls(s)) continue;
                if (g.has_edge(ord.vertex_at(r), ord.vertex_at(s)) != want_edge)
                    return ConsistencyViolation{want_edge ? ViolationKind::class_not_complete
                                                          : ViolationKind::class_not_independent,
                                                r, s, -1};
            }
    }
    return std::nullopt;
}

// G_< (strong = false) or G-tilde_< (strong = true) on the same vertex labels.
// An edge says its endpoints cannot share a class under the ordering.
inline Graph incompatibility_graph(const Graph& g, const VertexOrdering& ord, bool strong) {
    int n = g.n();
    if (ord.n() != n) throw std::invalid_argument("incompatibility_graph: ordering size mismatch");
    std::vector<VertexSet> after(static_cast<size_t>(n) + 1, 0);
    for (int j = n - 1; j >= 0; j--)
        after[static_cast<size_t>(j)] = after[static_cast<size_t>(j) + 1] | bit(ord.vertex_at(j));
    Graph out(n);
    VertexSet before = 0;  // vertices at positions < i
    for (int i = 0; i < n; i++) {
        int v = ord.vertex_at(i);
        for (int j = i + 1; j < n; j++) {
            int w = ord.vertex_at(j);
            bool edge = (g.neighbors(v) & ~g.neighbors(w) & after[static_cast<size_t>(j) + 1]) != 0;
            if (!edge && strong) edge = (g.neighbors(w) & ~g.neighbors(v) & before) != 0;
            if (edge) out.add_edge(v, w);
        }
        before |= bit(v);
    }
    return out;
}

// The graph whose proper colorings are exactly the partitions consistent
// with the ordering under the variant: the incompatibility graph, plus E(G)
// for independent classes, plus E(complement(G)) for complete classes.
inline Graph variant_conflict_graph(const Graph& g, const VertexOrdering& ord, const Variant& variant) {
    Graph out = incompatibility_graph(g, ord, variant.proper);
    if (variant.class_constraint == ClassConstraint::independent) {
        for (auto [u, v] : g.edges()) out.add_edge(u, v);
    } else if (variant.class_constraint == ClassConstraint::complete) {
        for (auto [u, v] : g.complement().edges()) out.add_edge(u, v);
    }
    return out;
}

// (variant, ordering, partition) certifying that the graph it was built for
// is variant-k-thin with k = value = partition.k.
struct ThinWitness {
    Variant variant;
    VertexOrdering ordering;
    Partition partition;
    int value = 0;

    ThinWitness() = default;
    ThinWitness(Variant var, VertexOrdering ord, Partition part)
        : variant(var), ordering(std::move(ord)), partition(std::move(part)), value(partition.k) {}

    std::optional<ConsistencyViolation> verify(const Graph& g) const {
        return check_consistent(g, ordering, partition, variant);
    }
};

// Witness file format:
// {"variant": {"proper": bool, "class_constraint": str}, "order": [...], "classes": [...]}
inline nlohmann::json witness_to_json(const ThinWitness& w) {
    nlohmann::json j;
    j["variant"] = {{"proper", w.variant.proper},
                    {"class_constraint", class_constraint_name(w.variant.class_constraint)}};
    j["order"] = w.ordering.order;
    j["classes"] = w.partition.class_of;
    return j;
}

inline ThinWitness witness_from_json(const nlohmann::json& j) {
    Variant var;
    var.proper = j.at("variant").at("proper").get<bool>();
    std::string cc = j.at("variant").at("class_constraint").get<std::string>();
    if (cc == "none") var.class_constraint = ClassConstraint::none;
    else if (cc == "independent") var.class_constraint = ClassConstraint::independent;
    else if (cc == "complete") var.class_constraint = ClassConstraint::complete;
    else throw std::invalid_argument("witness json: unknown class_constraint " + cc);
    VertexOrdering ord(j.at("order").get<std::vector<int>>());
    Partition part = Partition::from_labels(j.at("classes").get<std::vector<int>>());
    return ThinWitness(var, std::move(ord), std::move(part));
}

}  // namespace thinness

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinness/families.hpp"
#include "thinness/graph.hpp"
#include "thinness/interval.hpp"
#include "thinness/invariants.hpp"
#include "thinness/products.hpp"

namespace thinness {

// Machine-checkable lower/upper bound tied to one theorem. `parameter` names
// the variant the bound constrains (thin unless stated). An inapplicable
// certificate records why instead of a value.
struct BoundCertificate {
    enum class Direction { lower, upper };
    Direction direction;
    int value = 0;
    std::string theorem;
    std::string parameter = "thin";
    bool applicable = true;
    std::string note;  // failed hypothesis or cap, when not applicable
    nlohmann::json evidence;
};

inline nlohmann::json certificate_to_json(const BoundCertificate& c) {
    return {{"direction", c.direction == BoundCertificate::Direction::lower ? "lower" : "upper"},
            {"value", c.value},
            {"theorem_id", c.theorem},
            {"parameter", c.parameter},
            {"applicable", c.applicable},
            {"note", c.note},
            {"evidence", c.evidence}};
}

namespace detail {
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

inline BoundCertificate skip(BoundCertificate::Direction dir, std::string theorem, std::string why) {
    BoundCertificate c;
    c.direction = dir;
    c.theorem = std::move(theorem);
    c.applicable = false;
    c.note = std::move(why);
    return c;
}
}  // namespace detail

// thin(G) >= 1 + min |N(u)\N[v]| over ordered pairs; with a subset S, the
// bound 1 + k + |S| - |V| applies when |V| - |S| <= k (k the minimum over
// pairs inside S). Evidence: the minimizing pair.
inline BoundCertificate lb_neighborhood(const Graph& g, std::optional<VertexSet> subset = std::nullopt) {
    if (g.n() < 2) throw std::domain_error("lb_neighborhood: needs at least two vertices");
    VertexSet s = subset.value_or(g.vertices());
    if (subset && ((s & ~g.vertices()) != 0 || popcount(s) < 2))
        throw std::invalid_argument("lb_neighborhood: S must be a vertex subset with |S| >= 2");

    int k = g.n();
    int best_u = -1, best_v = -1;
    for_each_bit(s, [&](int u) {
        for_each_bit(s, [&](int v) {
            if (u == v) return;
            int d = popcount(g.neighbors(u) & ~g.closed_neighbors(v));
            if (d < k) {
                k = d;
                best_u = u;
                best_v = v;
            }
        });
    });

    BoundCertificate c;
    c.direction = BoundCertificate::Direction::lower;
    c.evidence = {{"pair", {best_u, best_v}}, {"min_difference", k}};
    if (!subset) {
        c.theorem = "thm:degree";
        c.value = 1 + k;
    } else {
        c.theorem = "thm:degree-subset";
        int p = popcount(s);
        c.evidence["subset"] = set_to_vector(s);
        if (g.n() - p <= k) {
            c.value = 1 + k + p - g.n();
        } else {
            c.applicable = false;
            c.value = 0;
            c.note = "|V| - |S| exceeds the pair minimum";
        }
    }
    return c;
}

// thin(G) >= b_v(G)/Delta(G) where b_v is the vertex isoperimetric peak,
// computed exhaustively over all subset sizes. Ceiling applied.
inline BoundCertificate lb_isoperimetric(const Graph& g, int cap = 12) {
    if (!g.has_any_edge()) throw std::domain_error("lb_isoperimetric: needs at least one edge");
    if (g.n() > cap)
        throw CapExceeded("lb_isoperimetric: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(cap));
    int n = g.n();
    std::vector<int> min_boundary(static_cast<size_t>(n), n + 1);
    std::vector<VertexSet> argmin(static_cast<size_t>(n), 0);
    for (VertexSet x = 1; x < g.vertices(); x++) {
        int s = popcount(x);
        VertexSet boundary = 0;
        for_each_bit(x, [&](int v) { boundary |= g.neighbors(v); });
        boundary &= ~x;
        int b = popcount(boundary);
        if (b < min_boundary[static_cast<size_t>(s)]) {
            min_boundary[static_cast<size_t>(s)] = b;
            argmin[static_cast<size_t>(s)] = x;
        }
    }
    int peak = 0, peak_size = 1;
    for (int s = 1; s < n; s++)
        if (min_boundary[static_cast<size_t>(s)] > peak) {
            peak = min_boundary[static_cast<size_t>(s)];
            peak_size = s;
        }
    BoundCertificate c;
    c.direction = BoundCertificate::Direction::lower;
    c.theorem = "thm:peak";
    c.value = detail::ceil_div(peak, g.max_degree());
    c.evidence = {{"b_v", peak},
                  {"delta", g.max_degree()},
                  {"peak_size", peak_size},
                  {"min_boundary_set", set_to_vector(argmin[static_cast<size_t>(peak_size)])}};
    return c;
}

// thin(complement(G1 boxminus_f G2)) >= ceil(n/2): each matched pair puts one
// endpoint into one of two cliques of the incompatibility graph.
inline BoundCertificate lb_boxminus(const Graph& g1, const Graph& g2, const std::vector<int>& f) {
    if (g1.n() != g2.n()) throw std::invalid_argument("lb_boxminus: factors must have equal order");
    Graph joined = boxminus(g1, g2, f);  // validates f
    BoundCertificate c;
    c.direction = BoundCertificate::Direction::lower;
    c.theorem = "thm:gcrown";
    c.value = detail::ceil_div(g1.n(), 2);
    c.evidence = {{"n", g1.n()}, {"bijection", f}};
    (void)joined;
    return c;
}

struct UbOptions {
    int interval_cap = 10;
    int orientation_cap = 8;
    int invariant_cap = default_invariant_cap;
};

// Every applicable general upper bound, each with re-checkable evidence.
inline std::vector<BoundCertificate> ub_suite(const Graph& g, const UbOptions& opts = {}) {
    using D = BoundCertificate::Direction;
    std::vector<BoundCertificate> out;
    int n = g.n();
    if (n == 0) return out;

    bool caps_ok = n <= opts.invariant_cap;
    int alpha = caps_ok ? stability_number(g) : 0;
    int omega = caps_ok ? clique_number(g) : 0;

    // n - alpha, when V is not a stable set
    if (!caps_ok) {
        out.push_back(detail::skip(D::upper, "cor:thin-alpha", "invariant cap"));
    } else if (!g.has_any_edge()) {
        out.push_back(detail::skip(D::upper, "cor:thin-alpha", "V(G) is a stable set"));
    } else {
        BoundCertificate c{D::upper, n - alpha, "cor:thin-alpha"};
        c.evidence = {{"alpha", alpha}, {"stable_set", set_to_vector(max_stable_set(g))}};
        out.push_back(std::move(c));
    }

    // n - omega, when G is not complete
    if (!caps_ok) {
        out.push_back(detail::skip(D::upper, "cor:thin-omega", "invariant cap"));
    } else if (g.is_complete()) {
        out.push_back(detail::skip(D::upper, "cor:thin-omega", "G is complete"));
    } else {
        BoundCertificate c{D::upper, n - omega, "cor:thin-omega"};
        c.evidence = {{"omega", omega}, {"clique", set_to_vector(max_clique(g))}};
        out.push_back(std::move(c));
    }

    // n - log2(n)/4
    {
        BoundCertificate c{D::upper, static_cast<int>(std::floor(n - std::log2(static_cast<double>(n)) / 4.0)),
                           "thm:n-log4"};
        c.evidence = {{"n", n}};
        out.push_back(std::move(c));
    }

    // n(Delta+3)/(Delta+4); vacuous below two vertices (evaluates under 1)
    if (n >= 2) {
        int delta = g.max_degree();
        BoundCertificate c{D::upper, n * (delta + 3) / (delta + 4), "thm:bound-delta"};
        c.evidence = {{"n", n}, {"delta", delta}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::skip(D::upper, "thm:bound-delta", "trivial graph"));
    }

    // n - |S| + 1 for a maximum induced interval subgraph S
    if (n <= opts.interval_cap) {
        VertexSet s = max_induced_interval_subgraph(g, opts.interval_cap);
        BoundCertificate c{D::upper, n - popcount(s) + 1, "cor:subgint"};
        c.evidence = {{"interval_subgraph", set_to_vector(s)}, {"size", popcount(s)}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::skip(D::upper, "cor:subgint", "interval search cap"));
    }

    // tau(F) + 1 for a heuristic interval completion H = G + F
    if (caps_ok) {
        int best_tau = -1;
        std::vector<std::pair<int, int>> best_fill;
        std::vector<std::vector<int>> orders;
        std::vector<int> identity(static_cast<size_t>(n));
        for (int i = 0; i < n; i++) identity[static_cast<size_t>(i)] = i;
        orders.push_back(identity);
        std::vector<int> by_degree = identity;
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
        orders.push_back(by_degree);
        for (const auto& order : orders) {
            Graph h = interval_completion_for_order(g, order);
            Graph fill(n);
            for (auto [u, v] : h.edges())
                if (!g.has_edge(u, v)) fill.add_edge(u, v);
            int tau = min_vertex_cover(fill);
            if (best_tau < 0 || tau < best_tau) {
                best_tau = tau;
                best_fill = fill.edges();
            }
        }
        BoundCertificate c{D::upper, best_tau + 1, "cor:interval-completion"};
        nlohmann::json fill_edges = nlohmann::json::array();
        for (auto [u, v] : best_fill) fill_edges.push_back({u, v});
        c.evidence = {{"fill_edges", fill_edges}, {"tau", best_tau}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::skip(D::upper, "cor:interval-completion", "invariant cap"));
    }

    // |V|/2 for nontrivial co-comparability graphs
    if (n < 2) {
        out.push_back(detail::skip(D::upper, "thm:cocomp-half", "trivial graph"));
    } else if (n > opts.orientation_cap) {
        out.push_back(detail::skip(D::upper, "thm:cocomp-half", "orientation search cap"));
    } else if (auto orientation = transitive_orientation(g.complement(), opts.orientation_cap)) {
        BoundCertificate c{D::upper, n / 2, "thm:cocomp-half"};
        nlohmann::json arcs = nlohmann::json::array();
        for (auto [u, v] : *orientation) arcs.push_back({u, v});
        c.evidence = {{"complement_orientation", arcs}};
        out.push_back(std::move(c));
    } else {
        out.push_back(detail::skip(D::upper, "thm:cocomp-half", "complement has no transitive orientation"));
    }

    // independent / complete variants: one extra class on top of n - alpha / n - omega
    if (caps_ok) {
        BoundCertificate ci{D::upper, n - alpha + 1, "rem:bounds-indep"};
        ci.parameter = "indthin";
        ci.evidence = {{"alpha", alpha}};
        out.push_back(std::move(ci));
        BoundCertificate cc{D::upper, n - omega + 1, "rem:bounds-indep"};
        cc.parameter = "compthin";
        cc.evidence = {{"omega", omega}};
        out.push_back(std::move(cc));
    }

    return out;
}

// Lower-bound corollaries for thin(product of g1 and g2), computed from
// factor invariants only (the product itself is never needed).
inline std::vector<BoundCertificate> lb_product_suite(ProductKind kind, const Graph& g1, const Graph& g2,
                                                      int invariant_cap = default_invariant_cap) {
    using D = BoundCertificate::Direction;
    std::vector<BoundCertificate> out;
    if (g1.n() == 0 || g2.n() == 0) return out;
    bool caps_ok = g1.n() <= invariant_cap && g2.n() <= invariant_cap;
    if (!caps_ok) {
        out.push_back(detail::skip(D::lower, product_kind_name(kind) + std::string("-lower"), "invariant cap"));
        return out;
    }
    int omega1 = clique_number(g1), omega2 = clique_number(g2);
    auto lip_pair = [&]() -> std::optional<std::pair<int, int>> {
        if (!g1.connected() || !g2.connected()) return std::nullopt;
        return std::make_pair(longest_induced_path(g1, invariant_cap), longest_induced_path(g2, invariant_cap));
    };
    auto push = [&](std::string theorem, int value, nlohmann::json evidence) {
        BoundCertificate c{D::lower, value, std::move(theorem)};
        c.evidence = std::move(evidence);
        out.push_back(std::move(c));
    };

    switch (kind) {
        case ProductKind::cartesian: {
            if (auto lips = lip_pair()) {
                int m = std::min(lips->first, lips->second);
                push("cor:lowercart", detail::ceil_div(m + 1, 4), {{"lip1", lips->first}, {"lip2", lips->second}});
            } else {
                out.push_back(detail::skip(D::lower, "cor:lowercart", "factors not both connected"));
            }
            push("cor:lowercart2", std::min(omega1, omega2), {{"omega1", omega1}, {"omega2", omega2}});
            break;
        }
        case ProductKind::lex: {
            if (!g2.is_complete())
                push("thm:lexomega", omega1, {{"omega1", omega1}});
            else
                out.push_back(detail::skip(D::lower, "thm:lexomega", "G2 is complete"));
            break;
        }
        case ProductKind::direct: {
            if (g2.has_any_edge())
                push("cor:lowerdirect", detail::ceil_div(omega1, 2), {{"omega1", omega1}});
            else
                out.push_back(detail::skip(D::lower, "cor:lowerdirect", "G2 has no edge"));
            if (auto lips = lip_pair()) {
                int m = std::min(lips->first, lips->second);
                push("cor:lowerdirect2", detail::ceil_div(m + 1, 8), {{"lip1", lips->first}, {"lip2", lips->second}});
            } else {
                out.push_back(detail::skip(D::lower, "cor:lowerdirect2", "factors not both connected"));
            }
            break;
        }
        case ProductKind::strong: {
            if (auto lips = lip_pair()) {
                int m = std::min(lips->first, lips->second);
                push("cor:lowerstrong", detail::ceil_div(m + 1, 8), {{"lip1", lips->first}, {"lip2", lips->second}});
            } else {
                out.push_back(detail::skip(D::lower, "cor:lowerstrong", "factors not both connected"));
            }
            break;
        }
        case ProductKind::conormal: {
            if (!g2.is_complete())
                push("cor:lowerconorm", omega1, {{"omega1", omega1}});
            else
                out.push_back(detail::skip(D::lower, "cor:lowerconorm", "G2 is complete"));
            int mim1 = max_induced_matching(g1, invariant_cap), mim2 = max_induced_matching(g2, invariant_cap);
            push("cor:lowerconorm2", 2 * std::min(mim1, mim2) - 2, {{"mim1", mim1}, {"mim2", mim2}});
            break;
        }
        case ProductKind::modular: {
            if (g2.has_any_edge())
                push("cor:lowermodular", detail::ceil_div(omega1, 2), {{"omega1", omega1}});
            else
                out.push_back(detail::skip(D::lower, "cor:lowermodular", "G2 has no edge"));
            push("cor:lowermodular2", max_induced_matching(g1, invariant_cap),
                 {{"mim1", max_induced_matching(g1, invariant_cap)}});
            break;
        }
        case ProductKind::homomorphic: {
            if (g1.has_any_edge())
                push("cor:lowerhomo", max_induced_matching(g2, invariant_cap),
                     {{"mim2", max_induced_matching(g2, invariant_cap)}});
            else
                out.push_back(detail::skip(D::lower, "cor:lowerhomo", "G1 has no edge"));
            break;
        }
        case ProductKind::hom: {
            if (g1.has_any_edge())
                push("cor:lowerhom", detail::ceil_div(omega2, 2), {{"omega2", omega2}});
            else
                out.push_back(detail::skip(D::lower, "cor:lowerhom", "G1 has no edge"));
            push("cor:lowerhom2", max_induced_matching(g1, invariant_cap),
                 {{"mim1", max_induced_matching(g1, invariant_cap)}});
            break;
        }
        default:
            break;
    }
    return out;
}

}  // namespace thinness

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

#include "thinness/coloring.hpp"
#include "thinness/enumerate.hpp"
#include "thinness/graph.hpp"
#include "thinness/ordering.hpp"

namespace thinness {

inline constexpr int default_search_cap = 10;
inline constexpr int default_order_cap = 16;

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t orderings_evaluated = 0;
    std::uint64_t prunes = 0;
    std::int64_t millis = 0;
};

struct SolveResult {
    int value = 0;
    bool exact = true;  // false only after a timeout: value is an upper bound
    ThinWitness witness;
    SolveStats stats;
};

struct SolverOptions {
    int search_cap = default_search_cap;  // hard cap unless a timeout is given
    std::int64_t timeout_ms = 0;          // 0: none
    bool use_pruning = true;
    bool use_symmetry = true;
};

// Minimum class count consistent with a fixed ordering: the chromatic number
// of the variant conflict graph, with a witnessing partition.
inline std::pair<int, Partition> min_classes_for_ordering(const Graph& g, const VertexOrdering& ord,
                                                          const Variant& variant,
                                                          int cap = default_order_cap) {
    if (g.n() > cap)
        throw CapExceeded("min_classes_for_ordering: " + std::to_string(g.n()) + " vertices exceeds cap " +
                          std::to_string(cap));
    ColoringResult col = exact_coloring(variant_conflict_graph(g, ord, variant));
    return {col.chromatic_number, Partition(std::move(col.coloring), col.chromatic_number)};
}

namespace detail {

// Lower bound valid for every variant: the first k+1 vertices of any ordering
// induce a clique in G_< when all pairs have |N(u)\N[v]| >= k, and every
// variant's conflict graph contains G_<.
inline int pair_lower_bound(const Graph& g) {
    if (g.n() < 2) return g.n();
    int k = g.n();
    for (int u = 0; u < g.n() && k > 0; u++)
        for (int v = 0; v < g.n() && k > 0; v++)
            if (u != v) k = std::min(k, popcount(g.neighbors(u) & ~g.closed_neighbors(v)));
    return k + 1;
}

inline int variant_lower_bound(const Graph& g, const Variant& variant) {
    int lb = std::max(1, pair_lower_bound(g));
    if (variant.class_constraint == ClassConstraint::independent)
        lb = std::max(lb, chromatic_number(g));
    else if (variant.class_constraint == ClassConstraint::complete)
        lb = std::max(lb, chromatic_number(g.complement()));
    return lb;
}

}  // namespace detail

// Exact thinness of a variant: the minimum of min_classes_for_ordering over
// all orderings, by prefix-extension branch and bound. Incompatibility edges
// between placed vertices are already final (any unplaced witness ends up
// after both; earlier-position witnesses are already placed), so a clique in
// the partial conflict graph at or above the incumbent prunes the branch.
// The first position ranges over automorphism orbit representatives only.
inline SolveResult exact_value(const Graph& g, const Variant& variant, const SolverOptions& opts = {}) {
    const int n = g.n();
    if (n > opts.search_cap && opts.timeout_ms <= 0)
        throw CapExceeded("exact_value: " + std::to_string(n) + " vertices exceeds search cap " +
                          std::to_string(opts.search_cap) + " (set a timeout to search anyway)");

    auto started = std::chrono::steady_clock::now();
    SolveResult result;
    auto finish = [&](bool exact) {
        result.exact = exact;
        result.stats.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        return result;
    };

    if (n == 0) {
        result.value = 0;
        result.witness = ThinWitness(variant, VertexOrdering::identity(0), Partition::single_class(0));
        return finish(true);
    }

    const int lower = detail::variant_lower_bound(g, variant);

    auto [k0, part0] = min_classes_for_ordering(g, VertexOrdering::identity(n), variant, std::max(n, default_order_cap));
    int best = k0;
    ThinWitness best_witness(variant, VertexOrdering::identity(n), std::move(part0));
    result.stats.orderings_evaluated = 1;
    if (best == lower) {
        result.value = best;
        result.witness = std::move(best_witness);
        return finish(true);
    }

    // prefix state: vertex and cumulative before-set per position, plus the
    // conflict graph among placed positions
    std::vector<int> at_pos(static_cast<size_t>(n), -1);
    std::vector<VertexSet> before(static_cast<size_t>(n) + 1, 0);  // vertices at positions < i
    std::vector<VertexSet> conflict(static_cast<size_t>(n), 0);    // by position index
    bool timed_out = false;

    std::function<void(int, VertexSet)> search = [&](int m, VertexSet remaining) {
        if (best == lower || timed_out) return;
        if (opts.timeout_ms > 0 && (result.stats.nodes & 1023) == 0) {
            auto elapsed =
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
            if (elapsed.count() >= opts.timeout_ms) {
                timed_out = true;
                return;
            }
        }
        if (m == n) {
            result.stats.orderings_evaluated++;
            Graph conflict_graph(n);
            for (int i = 0; i < n; i++)
                for_each_bit(conflict[static_cast<size_t>(i)] & ~full_set(i + 1),
                             [&](int j) { conflict_graph.add_edge(i, j); });
            ColoringResult col = exact_coloring(conflict_graph);
            if (col.chromatic_number < best) {
                best = col.chromatic_number;
                std::vector<int> order(at_pos.begin(), at_pos.end());
                std::vector<int> class_of(static_cast<size_t>(n));
                for (int i = 0; i < n; i++)
                    class_of[static_cast<size_t>(order[static_cast<size_t>(i)])] = col.coloring[static_cast<size_t>(i)];
                best_witness = ThinWitness(variant, VertexOrdering(std::move(order)),
                                           Partition(std::move(class_of), best));
            }
            return;
        }
        std::vector<int> candidates;
        if (m == 0 && opts.use_symmetry)
            candidates = orbit_representatives(g);
        else
            candidates = set_to_vector(remaining);
        for (int u : candidates) {
            result.stats.nodes++;
            at_pos[static_cast<size_t>(m)] = u;
            VertexSet rest = remaining & ~bit(u);
            // conflict edges from earlier positions to position m are final now
            std::vector<VertexSet> added(static_cast<size_t>(m), 0);
            for (int i = 0; i < m; i++) {
                int v = at_pos[static_cast<size_t>(i)];
                bool edge = (g.neighbors(v) & ~g.neighbors(u) & rest) != 0;
                if (!edge && variant.proper)
                    edge = (g.neighbors(u) & ~g.neighbors(v) & before[static_cast<size_t>(i)]) != 0;
                if (!edge && variant.class_constraint == ClassConstraint::independent) edge = g.has_edge(v, u);
                if (!edge && variant.class_constraint == ClassConstraint::complete) edge = !g.has_edge(v, u);
                if (edge) {
                    conflict[static_cast<size_t>(i)] |= bit(m);
                    conflict[static_cast<size_t>(m)] |= bit(i);
                    added[static_cast<size_t>(i)] = bit(m);
                }
            }
            before[static_cast<size_t>(m) + 1] = before[static_cast<size_t>(m)] | bit(u);
            bool prune = false;
            if (opts.use_pruning && m + 1 >= best) {
                // clique of size >= best in the placed-positions conflict graph
                VertexSet placed = full_set(m + 1);
                int cap_hit = 0;
                std::function<void(VertexSet, int)> clique = [&](VertexSet cand, int size) {
                    if (size >= best) {
                        cap_hit = 1;
                        return;
                    }
                    while (cand && !cap_hit) {
                        if (size + popcount(cand) < best) return;
                        int x = lowest(cand);
                        cand &= cand - 1;
                        clique(cand & conflict[static_cast<size_t>(x)], size + 1);
                    }
                };
                clique(placed, 0);
                prune = cap_hit != 0;
            }
            if (prune)
                result.stats.prunes++;
            else
                search(m + 1, rest);
            conflict[static_cast<size_t>(m)] = 0;
            for (int i = 0; i < m; i++) conflict[static_cast<size_t>(i)] &= ~added[static_cast<size_t>(i)];
            at_pos[static_cast<size_t>(m)] = -1;
            if (best == lower || timed_out) return;
        }
    };
    search(0, g.vertices());

    result.value = best;
    result.witness = std::move(best_witness);
    return finish(!timed_out);
}

// Ground truth by definition-level enumeration: all orderings, all partitions
// into at most k classes, checked directly against the consistency triples
// (and the reversed ordering when proper). Builds no conflict graphs; used
// only for cross-validation.
inline int brute_force_oracle(const Graph& g, const Variant& variant, int cap = 7) {
    const int n = g.n();
    if (n > cap) throw CapExceeded("brute_force_oracle: " + std::to_string(n) + " vertices exceeds cap 7");
    if (n == 0) return 0;

    auto consistent = [&](const std::vector<int>& order, const std::vector<int>& cls) {
        for (int t = 2; t < n; t++)
            for (int s = 1; s < t; s++)
                for (int r = 0; r < s; r++) {
                    int vr = order[static_cast<size_t>(r)], vs = order[static_cast<size_t>(s)],
                        vt = order[static_cast<size_t>(t)];
                    if (cls[static_cast<size_t>(vr)] == cls[static_cast<size_t>(vs)] && g.has_edge(vt, vr) &&
                        !g.has_edge(vt, vs))
                        return false;
                }
        return true;
    };
    auto classes_ok = [&](const std::vector<int>& cls) {
        if (variant.class_constraint == ClassConstraint::none) return true;
        bool want_edge = variant.class_constraint == ClassConstraint::complete;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)] && g.has_edge(u, v) != want_edge)
                    return false;
        return true;
    };

    for (int k = 1; k <= n; k++) {
        // restricted-growth strings bounded by k classes
        std::vector<int> cls(static_cast<size_t>(n), 0);
        std::function<bool(int, int)> partitions = [&](int idx, int used) -> bool {
            if (idx == n) {
                if (!classes_ok(cls)) return false;
                std::vector<int> order(static_cast<size_t>(n));
                for (int i = 0; i < n; i++) order[static_cast<size_t>(i)] = i;
                do {
                    if (!consistent(order, cls)) continue;
                    if (variant.proper) {
                        std::vector<int> rev(order.rbegin(), order.rend());
                        if (!consistent(rev, cls)) continue;
                    }
                    return true;
                } while (std::next_permutation(order.begin(), order.end()));
                return false;
            }
            int limit = std::min(used + 1, k);
            for (int c = 0; c < limit; c++) {
                cls[static_cast<size_t>(idx)] = c;
                if (partitions(idx + 1, std::max(used, c + 1))) return true;
            }
            return false;
        };
        if (partitions(1, 1)) return k;
    }
    return n;
}

inline nlohmann::json solve_result_to_json(const SolveResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    j["exact"] = r.exact;
    j["witness"] = witness_to_json(r.witness);
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"orderings_evaluated", r.stats.orderings_evaluated},
                  {"prunes", r.stats.prunes},
                  {"millis", r.stats.millis}};
    return j;
}

}  // namespace thinness

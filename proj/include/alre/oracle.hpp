#pragma once

#include "search.hpp"

namespace alre {

namespace detail {

// Saturating pow for the enumerator bound checks.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}
inline std::uint64_t sat_pow(std::uint64_t base, long exp) {
    std::uint64_t r = 1;
    for (long i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

// Expanded-state ceiling of the plain enumerator: sum over depths of (n^2)^i
// for jump/slide moves, (2n)^l for addition/removal.
inline std::uint64_t xp_state_ceiling(int n, long ell, MoveKind kind) {
    std::uint64_t nn = std::uint64_t(n);
    if (kind == MoveKind::tar) return sat_pow(sat_mul(2, nn), ell);
    std::uint64_t total = 0, per = sat_mul(nn, nn);
    for (long i = 0; i <= ell; ++i) {
        std::uint64_t t = sat_pow(per, i);
        total = (total > UINT64_MAX - t) ? UINT64_MAX : total + t;
    }
    return total;
}

} // namespace detail

// Exact BFS over the implicit reconfiguration graph: every configuration
// satisfying the variant (and the TAR cap) is a node, legal steps are edges.
// min_moves is the BFS distance; the witness is reconstructed via parent
// pointers and is deterministic (canonically least successors first).
inline Outcome solve_exact(const Instance& inst, const SearchLimits& limits_in = {}) {
    inst.validate();
    SearchLimits limits = limits_in;
    if (inst.move_bound) {
        if (!limits.move_bound || *inst.move_bound < *limits.move_bound)
            limits.move_bound = inst.move_bound;
    }
    StepChecker checker(inst.graph, inst.variant);
    Outcome out = bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                             [&](const VertexSet& a, std::vector<Move>& moves) {
                                 emit_all_moves(inst.graph, inst.rule, a, moves);
                             });
    if (limits.move_bound && *limits.move_bound >= 0) {
        std::uint64_t ceil =
            detail::xp_state_ceiling(inst.graph.vertex_count(), *limits.move_bound, inst.rule.kind);
        require_internal(out.stats.expanded <= ceil, "solve_exact: enumerator bound exceeded");
    }
    return out;
}

// All variant-satisfying configurations with min_size <= |A| <= max_size, in
// canonical order (size first, then canonical set order).
inline std::vector<VertexSet> enumerate_configs(const Graph& g, const Variant& variant,
                                                int min_size, int max_size,
                                                std::uint64_t budget = 10'000'000) {
    require_internal(min_size >= 0 && max_size >= min_size, "enumerate_configs: bad size range");
    std::vector<VertexSet> out;
    std::uint64_t examined = 0;
    VertexSet cur(g.vertex_count());
    // depth-first subset enumeration; prunes once the size cap is hit
    auto rec = [&](auto&& self, int next, int size) -> void {
        if (++examined > budget) throw resource_error("enumerate_configs: budget exceeded");
        if (size >= min_size && size <= max_size && satisfies(g, cur, variant))
            out.push_back(cur);
        if (size == max_size) return;
        for (int v = next; v <= g.vertex_count(); ++v) {
            cur.set(v);
            self(self, v + 1, size + 1);
            cur.reset(v);
        }
    };
    rec(rec, 1, 0);
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return VertexSet::canonical_less(a, b);
    });
    return out;
}

// Dominating-set reconfiguration under token jumping, the source problem of
// every hardness construction in the reductions module.
inline Outcome solve_ds_reconfig_tj(const Graph& g, const VertexSet& d_s, const VertexSet& d_t,
                                    const SearchLimits& limits = {}) {
    if (!is_dominating(g, d_s)) throw malformed_input_error("ds-reconfig: start is not dominating");
    if (!is_dominating(g, d_t)) throw malformed_input_error("ds-reconfig: target is not dominating");
    if (d_s.count() != d_t.count())
        throw malformed_input_error("ds-reconfig: endpoint sizes differ");
    DominationChecker checker(g);
    MoveRule rule{MoveKind::tj, 0};
    return bfs_search(checker, rule, d_s, d_t, limits,
                      [&](const VertexSet& a, std::vector<Move>& moves) {
                          emit_all_moves(g, rule, a, moves);
                      });
}

} // namespace alre

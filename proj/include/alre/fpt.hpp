#pragma once

#include "monotonicity.hpp"
#include "oracle.hpp"

namespace alre {

// Token-sliding search with the per-expansion branching justified by the
// alliance inequalities: a token of a k-token defensive alliance has at most k
// neighbors outside (d_A(v)+1 >= d_{V\A}(v)), and a slide between offensive
// alliances needs the mover's outside-degree to stay within k. Candidates per
// expansion therefore never exceed k per token; the stats record the counts.
inline Outcome solve_ts_budgeted(const Instance& inst, long move_bound,
                                 const SearchLimits& limits_in = {}) {
    if (inst.rule.kind != MoveKind::ts) throw misuse_error("solve_ts_budgeted: rule must be ts");
    inst.validate();
    SearchLimits limits = limits_in;
    limits.move_bound = move_bound;
    if (inst.move_bound && *inst.move_bound < move_bound) limits.move_bound = inst.move_bound;
    const Graph& g = inst.graph;
    int k = inst.start.count();
    bool offensive_only = inst.variant.base == AllianceBase::offensive;
    StepChecker checker(g, inst.variant);
    return bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                      [&](const VertexSet& a, std::vector<Move>& moves) {
                          for (int v = a.first(); v != 0; v = a.next(v)) {
                              int outside = g.degree(v) -
                                            VertexSet::intersection_count(g.neighbors(v), a);
                              if (offensive_only && outside > k) continue;
                              const VertexSet& nv = g.neighbors(v);
                              for (int u = nv.first(); u != 0; u = nv.next(u))
                                  if (!a.test(u)) moves.push_back({v, u});
                          }
                      });
}

// Ground set of the distance-restricted defensive TAR search: vertices of
// degree at most 2k whose distance to the endpoints inside G[V<=2k] is at most
// the move bound, plus the endpoints themselves.
inline VertexSet da_search_space(const Graph& g, const VertexSet& a_s, const VertexSet& a_t,
                                 int k, long ell) {
    InducedSubgraph low = low_degree_subgraph(g, 2 * k);
    VertexSet seed(low.graph.vertex_count());
    VertexSet endpoints = a_s | a_t;
    endpoints.for_each([&](int v) {
        if (low.from_parent[v] != 0) seed.set(low.from_parent[v]);
    });
    VertexSet close = within_distance(low.graph, seed, ell);
    VertexSet out(g.vertex_count());
    close.for_each([&](int v) { out.set(low.to_parent[v]); });
    out |= endpoints;
    return out;
}

// Defensive TAR with candidates confined to da_search_space(cap, ell).
inline Outcome solve_da_tar_pruned(const Instance& inst, long move_bound,
                                   const SearchLimits& limits_in = {}) {
    if (inst.variant != Variant{AllianceBase::defensive, false, false})
        throw misuse_error("solve_da_tar_pruned: variant must be plain defensive");
    if (inst.rule.kind != MoveKind::tar) throw misuse_error("solve_da_tar_pruned: rule must be tar");
    inst.validate();
    SearchLimits limits = limits_in;
    limits.move_bound = move_bound;
    if (inst.move_bound && *inst.move_bound < move_bound) limits.move_bound = inst.move_bound;
    VertexSet ground = da_search_space(inst.graph, inst.start, inst.target, inst.rule.cap,
                                       limits.move_bound.value_or(move_bound));
    StepChecker checker(inst.graph, inst.variant);
    return bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                      [&](const VertexSet& a, std::vector<Move>& moves) {
                          emit_all_moves(inst.graph, inst.rule, a, moves, &ground);
                      });
}

// Defensive TJ via the monotonicity bridge: solve TAR with threshold k+1 and
// twice the move budget, then fold the witness back to jumps. Minimum jump
// count is half the minimum TAR count, rounded up.
inline Outcome solve_da_tj_pruned(const Instance& inst, long move_bound,
                                  const SearchLimits& limits_in = {}) {
    if (inst.variant != Variant{AllianceBase::defensive, false, false})
        throw misuse_error("solve_da_tj_pruned: variant must be plain defensive");
    if (inst.rule.kind != MoveKind::tj) throw misuse_error("solve_da_tj_pruned: rule must be tj");
    inst.validate();
    long bound = move_bound;
    if (inst.move_bound && *inst.move_bound < bound) bound = *inst.move_bound;
    int k = inst.start.count();
    Instance tar = inst;
    tar.rule = MoveRule{MoveKind::tar, k + 1};
    tar.move_bound.reset();
    Outcome t = solve_da_tar_pruned(tar, bound < 0 ? -1 : 2 * bound, limits_in);
    Outcome out;
    out.stats = t.stats;
    if (!t.reachable) return out;
    out.reachable = true;
    Sequence tj = tar_to_tj(inst.graph, inst.variant, k, *t.witness);
    out.min_moves = tj.moves();
    require_internal(*out.min_moves == (*t.min_moves + 1) / 2,
                     "solve_da_tj_pruned: jump count does not fold the TAR distance");
    out.witness = std::move(tj);
    return out;
}

namespace detail {

// Trims interchangeable isolate / isolated-edge vertices to at most 3k
// representatives outside the endpoints; endpoint members are always kept.
inline VertexSet trim_free_components(const Graph& g, const VertexSet& endpoints, int k) {
    VertexSet keep(g.vertex_count());
    int spare = 3 * k;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            if (endpoints.test(v)) keep.set(v);
            else if (spare > 0) {
                keep.set(v);
                --spare;
            }
        }
    }
    for (auto [u, v] : g.edges()) {
        if (!g.is_isolated_edge(u, v)) continue;
        if (endpoints.test(u) || endpoints.test(v)) {
            keep.set(u);
            keep.set(v);
        } else if (spare >= 2) {
            keep.set(u);
            keep.set(v);
            spare -= 2;
        }
    }
    return keep;
}

} // namespace detail

// Powerful alliances parameterized by token count alone. The useful ground set
// is Y(A_s) (equal to Y(A_t) whenever the instance is reachable) with the
// interchangeable isolate/isolated-edge vertices thinned to 3k
// representatives; the search itself is an unbounded-move BFS on that set.
inline Outcome solve_pa_k(const Instance& inst, const SearchLimits& limits_in = {}) {
    if (inst.variant.base != AllianceBase::powerful)
        throw misuse_error("solve_pa_k: base must be powerful");
    inst.validate();
    const Graph& g = inst.graph;
    if (!(y_set(g, inst.start) == y_set(g, inst.target))) {
        Outcome out; // distinct Y-sets are never connected by alliance steps
        return out;
    }
    int k = inst.rule.kind == MoveKind::tar ? inst.rule.cap : inst.start.count();
    VertexSet endpoints = inst.start | inst.target;
    VertexSet ground = y_set(g, inst.start);
    VertexSet free_kept = detail::trim_free_components(g, endpoints, k);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) <= 1 && ground.test(v)) {
            bool iso_edge = g.degree(v) == 1 && g.degree(g.neighbors(v).first()) == 1;
            if ((g.degree(v) == 0 || iso_edge) && !free_kept.test(v)) ground.reset(v);
        }
    // sibling leaves on a shared parent are interchangeable token positions;
    // 2k+1 designated ones per parent suffice
    for (int z = 1; z <= g.vertex_count(); ++z) {
        if (g.degree(z) < 2) continue;
        int quota = 2 * k + 1;
        const VertexSet& nz = g.neighbors(z);
        for (int leaf = nz.first(); leaf != 0; leaf = nz.next(leaf)) {
            if (g.degree(leaf) != 1) continue;
            if (endpoints.test(leaf)) continue;
            if (quota > 0) --quota;
            else ground.reset(leaf);
        }
    }
    ground |= endpoints;
    SearchLimits limits = limits_in;
    if (inst.move_bound) limits.move_bound = inst.move_bound;
    StepChecker checker(g, inst.variant);
    return bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                      [&](const VertexSet& a, std::vector<Move>& moves) {
                          emit_all_moves(g, inst.rule, a, moves, &ground);
                      });
}

// Global offensive alliances parameterized by token count. Vertices of degree
// above 2k are forced into every small global OA; among the rest, vertices
// already outgunned by the forced set partition by their neighborhood trace on
// the small residue, and at most 2k representatives per class need to carry
// tokens. Predicates stay exact: the class reduction restricts placement only.
inline Outcome solve_goa_k(const Instance& inst, const SearchLimits& limits_in = {}) {
    if (!(inst.variant.base == AllianceBase::offensive && inst.variant.global &&
          !inst.variant.independent))
        throw misuse_error("solve_goa_k: variant must be global offensive");
    inst.validate();
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    int k = inst.rule.kind == MoveKind::tar ? inst.rule.cap : inst.start.count();

    VertexSet forced(n); // D = {v : d(v) > 2k}
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) > 2 * k) forced.set(v);
    VertexSet heavy(n); // B = {v outside D : d_D(v) > d_{V\D}(v)}
    for (int v = 1; v <= n; ++v) {
        if (forced.test(v)) continue;
        int in = VertexSet::intersection_count(g.neighbors(v), forced);
        if (in > g.degree(v) - in) heavy.set(v);
    }
    VertexSet residue = g.vertices();
    residue.subtract(forced);
    residue.subtract(heavy);

    // group the heavy vertices by their neighborhood trace on the residue and
    // keep 2k representatives per class, always retaining endpoint members
    VertexSet endpoints = inst.start | inst.target;
    VertexSet ground = residue | forced | endpoints;
    std::vector<VertexSet> trace_of_class;
    std::vector<int> kept_in_class;
    for (int v = 1; v <= n; ++v) {
        if (!heavy.test(v)) continue;
        VertexSet trace = g.neighbors(v) & residue;
        std::size_t c = 0;
        for (; c < trace_of_class.size(); ++c)
            if (trace_of_class[c] == trace) break;
        if (c == trace_of_class.size()) {
            trace_of_class.push_back(trace);
            kept_in_class.push_back(0);
        }
        if (endpoints.test(v)) continue; // already in the ground set
        if (kept_in_class[c] < 2 * k) {
            ground.set(v);
            ++kept_in_class[c];
        }
    }

    SearchLimits limits = limits_in;
    if (inst.move_bound) limits.move_bound = inst.move_bound;
    StepChecker checker(g, inst.variant);
    return bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                      [&](const VertexSet& a, std::vector<Move>& moves) {
                          emit_all_moves(g, inst.rule, a, moves, &ground);
                      });
}

// Global defensive alliances parameterized by token count: validity of the
// start already pins |V| <= k + k^2, so the plain exact search is the
// parameterized algorithm.
inline Outcome solve_gda_k(const Instance& inst, const SearchLimits& limits_in = {}) {
    if (!(inst.variant.base == AllianceBase::defensive && inst.variant.global))
        throw misuse_error("solve_gda_k: variant must be global defensive");
    inst.validate();
    int k = inst.rule.kind == MoveKind::tar ? inst.rule.cap : inst.start.count();
    require_internal(inst.graph.vertex_count() <= k + k * k,
                     "solve_gda_k: a global defensive alliance of this size cannot exist here");
    return solve_exact(inst, limits_in);
}

} // namespace alre

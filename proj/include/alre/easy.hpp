#pragma once

#include "reconfig.hpp"

namespace alre {

namespace detail {

// Shared isolated-edge pairing: every token leaving A_s\A_t can only slide
// across its own isolated edge to a partner in A_t\A_s, and vice versa. Fills
// the witness with one slide per edge in increasing source-vertex order.
// `inspections` counts adjacency-list lookups; the routine touches each
// displaced vertex and its unique partner once.
inline Outcome isolated_edge_pairing(const Graph& g, const VertexSet& a_s, const VertexSet& a_t,
                                     std::uint64_t* inspections) {
    Outcome out;
    std::uint64_t looks = 0;
    VertexSet leaving = difference(a_s, a_t);
    VertexSet arriving = difference(a_t, a_s);
    std::vector<std::pair<int, int>> slides;
    bool ok = true;
    for (int x = leaving.first(); x != 0 && ok; x = leaving.next(x)) {
        ++looks;
        if (g.degree(x) != 1) {
            ok = false;
            break;
        }
        int y = g.neighbors(x).first();
        ++looks;
        if (g.degree(y) != 1 || !arriving.test(y)) {
            ok = false;
            break;
        }
        slides.emplace_back(x, y);
    }
    // every arriving vertex must be matched as well; counts are equal, and the
    // pairing above is injective, so checking the tally suffices
    if (ok && int(slides.size()) != arriving.count()) ok = false;
    if (inspections) *inspections = looks;
    if (!ok) return out;
    out.reachable = true;
    out.min_moves = long(slides.size());
    Sequence w;
    VertexSet cur = a_s;
    w.configs.push_back(cur);
    for (auto [x, y] : slides) {
        cur.reset(x);
        cur.set(y);
        w.configs.push_back(cur);
    }
    out.witness = std::move(w);
    return out;
}

} // namespace detail

// Independent offensive alliances under token sliding: reachable iff the
// symmetric difference decomposes into isolated edges pairing the two sides;
// the minimum is one slide per displaced token.
inline Outcome solve_idp_oa_ts(const Instance& inst, std::uint64_t* inspections = nullptr) {
    if (!(inst.variant.base == AllianceBase::offensive && inst.variant.independent &&
          !inst.variant.global))
        throw misuse_error("solve_idp_oa_ts: expects independent offensive, rule ts");
    if (inst.rule.kind != MoveKind::ts) throw misuse_error("solve_idp_oa_ts: expects rule ts");
    inst.validate();
    Outcome out = detail::isolated_edge_pairing(inst.graph, inst.start, inst.target, inspections);
    if (out.reachable && inst.move_bound && *out.min_moves > *inst.move_bound)
        return Outcome{};
    return out;
}

// Global independent offensive alliances: under TAR no step exists at all, so
// reachable iff start equals target; under TJ/TS every step is forced onto an
// isolated edge and the sliding criterion applies unchanged.
inline Outcome solve_gidp_oa(const Instance& inst, std::uint64_t* inspections = nullptr) {
    if (!(inst.variant.base == AllianceBase::offensive && inst.variant.independent &&
          inst.variant.global))
        throw misuse_error("solve_gidp_oa: expects global independent offensive");
    inst.validate();
    if (inst.rule.kind == MoveKind::tar) {
        Outcome out;
        if (inspections) *inspections = 0;
        if (inst.start == inst.target && (!inst.move_bound || *inst.move_bound >= 0)) {
            out.reachable = true;
            out.min_moves = 0;
            out.witness = Sequence{{inst.start}};
        }
        return out;
    }
    Outcome out = detail::isolated_edge_pairing(inst.graph, inst.start, inst.target, inspections);
    if (out.reachable && inst.move_bound && *out.min_moves > *inst.move_bound)
        return Outcome{};
    return out;
}

} // namespace alre

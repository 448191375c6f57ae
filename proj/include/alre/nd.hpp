#pragma once

#include <string>

#include "oracle.hpp"

namespace alre {

namespace detail {

inline std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
        r = r * (n - k + i) / i;
    }
    return r;
}

// Per-class retained token positions: endpoint members first, then the
// lowest-indexed fill up to 2k per class. Same-type exchange makes any witness
// normalizable onto these slots.
inline VertexSet nd_retained(const NdPartition& p, int n, const VertexSet& endpoints, int k) {
    VertexSet keep(n);
    for (const auto& cls : p.classes) {
        int quota = 2 * k;
        for (int v : cls)
            if (endpoints.test(v)) {
                keep.set(v);
                --quota;
            }
        for (int v : cls) {
            if (quota <= 0) break;
            if (endpoints.test(v)) continue;
            keep.set(v);
            --quota;
        }
    }
    return keep;
}

} // namespace detail

// Type-exchange reduction: tokens only ever need to occupy 2k representatives
// per neighborhood-diversity class (endpoint members always retained), so the
// exact search runs with placements confined to those slots while predicates
// stay those of the full graph. Visited-state count is asserted against the
// binomial ceiling this reduction guarantees.
inline Outcome solve_nd_k(const Instance& inst, const SearchLimits& limits_in = {}) {
    inst.validate();
    const Graph& g = inst.graph;
    NdPartition p = nd_partition(g);
    int k = inst.rule.kind == MoveKind::tar ? inst.rule.cap : inst.start.count();
    VertexSet endpoints = inst.start | inst.target;
    VertexSet ground = detail::nd_retained(p, g.vertex_count(), endpoints, k);
    SearchLimits limits = limits_in;
    if (inst.move_bound) limits.move_bound = inst.move_bound;
    StepChecker checker(g, inst.variant);
    Outcome out = bfs_search(checker, inst.rule, inst.start, inst.target, limits,
                             [&](const VertexSet& a, std::vector<Move>& moves) {
                                 emit_all_moves(g, inst.rule, a, moves, &ground);
                             });
    std::uint64_t slots = std::uint64_t(ground.count());
    std::uint64_t ceiling = 0;
    if (inst.rule.kind == MoveKind::tar) {
        for (int j = 0; j <= inst.rule.cap; ++j) {
            std::uint64_t t = detail::binomial_sat(slots, std::uint64_t(j));
            ceiling = (ceiling > UINT64_MAX - t) ? UINT64_MAX : ceiling + t;
        }
    } else {
        ceiling = detail::binomial_sat(slots, std::uint64_t(k));
    }
    require_internal(out.stats.visited <= ceiling, "solve_nd_k: state ceiling exceeded");
    return out;
}

// Depth-bounded branching where a move is characterized by its (source class,
// destination class) pair; the concrete vertices are canonical: sources avoid
// target members, destinations prefer them. Branching per expansion is at most
// nd^2 for jumps/slides and 2*nd for addition/removal.
inline Outcome solve_nd_ell(const Instance& inst, long move_bound,
                            const SearchLimits& limits_in = {}) {
    inst.validate();
    const Graph& g = inst.graph;
    NdPartition p = nd_partition(g);
    int d = p.count();
    SearchLimits limits = limits_in;
    limits.move_bound = move_bound;
    if (inst.move_bound && *inst.move_bound < move_bound) limits.move_bound = inst.move_bound;

    // canonical in-class choices
    auto pick_source = [&](const VertexSet& a, int cls) -> int {
        int fallback = 0;
        for (int v : p.classes[cls]) {
            if (!a.test(v)) continue;
            if (!inst.target.test(v)) return v;
            if (fallback == 0) fallback = v;
        }
        return fallback;
    };
    auto pick_dest = [&](const VertexSet& a, int cls) -> int {
        int fallback = 0;
        for (int v : p.classes[cls]) {
            if (a.test(v)) continue;
            if (inst.target.test(v)) return v;
            if (fallback == 0) fallback = v;
        }
        return fallback;
    };

    StepChecker checker(g, inst.variant);
    Outcome out = bfs_search(
        checker, inst.rule, inst.start, inst.target, limits,
        [&](const VertexSet& a, std::vector<Move>& moves) {
            if (inst.rule.kind == MoveKind::tar) {
                for (int c = 0; c < d; ++c) {
                    if (int v = pick_source(a, c); v != 0) moves.push_back({v, 0});
                    if (int u = pick_dest(a, c); u != 0) moves.push_back({0, u});
                }
                return;
            }
            for (int cf = 0; cf < d; ++cf) {
                int v = pick_source(a, cf);
                if (v == 0) continue;
                for (int ct = 0; ct < d; ++ct) {
                    // class-to-class adjacency is uniform, so the canonical
                    // picks realize a slide whenever the class pair allows one
                    if (inst.rule.kind == MoveKind::ts && !p.class_adjacent[cf][ct]) continue;
                    int u = pick_dest(a, ct);
                    if (u == 0) continue;
                    moves.push_back({v, u});
                }
            }
        });
    std::size_t branch_ceiling =
        inst.rule.kind == MoveKind::tar ? std::size_t(2 * d) : std::size_t(d) * std::size_t(d);
    require_internal(out.stats.max_branch <= branch_ceiling,
                     "solve_nd_ell: branching ceiling exceeded");
    return out;
}

// ---------------------------------------------------------------------------
// The jump-step integer program over neighborhood-diversity classes.

enum class IlpCmp { le, ge, eq };
enum class IlpMode { literal, validated };

struct IlpVariable {
    std::string name;
    long lo = 0;
    long hi = 1;
};

struct IlpConstraint {
    std::vector<std::pair<int, long>> terms; // (variable index, coefficient)
    IlpCmp cmp = IlpCmp::le;
    long rhs = 0;
    std::string tag;
};

struct IlpModel {
    std::vector<IlpVariable> vars;
    std::vector<IlpConstraint> cons;
    IlpMode mode = IlpMode::literal;
    std::vector<std::string> notes; // substitutions applied in validated mode

    int add_var(const std::string& name, long lo, long hi) {
        vars.push_back({name, lo, hi});
        return int(vars.size()) - 1;
    }
    void add_con(std::vector<std::pair<int, long>> terms, IlpCmp cmp, long rhs, std::string tag) {
        cons.push_back({std::move(terms), cmp, rhs, std::move(tag)});
    }
};

// Encodes "is there a jump sequence of at most ell configurations" as an
// integer program over per-class token counts x_{i,p} and jump indicators
// y_{i,j,p}. literal mode writes every row exactly as formulated; validated
// mode substitutes the rows the oracle sweep showed to be wrong (notes list
// them) so that feasibility coincides with reachability in ell-1 moves.
inline IlpModel encode_ilp(const Instance& inst, long ell, IlpMode mode) {
    if (inst.rule.kind != MoveKind::tj)
        throw misuse_error("encode_ilp: the program models token jumping only");
    if (ell < 1) throw misuse_error("encode_ilp: need at least one configuration");
    inst.validate();
    const Graph& g = inst.graph;
    NdPartition p = nd_partition(g);
    int d = p.count();
    long steps = ell - 1; // jump blocks; configurations 1..ell, x up to ell-1

    IlpModel m;
    m.mode = mode;
    bool want_def = inst.variant.base != AllianceBase::offensive;
    bool want_off = inst.variant.base != AllianceBase::defensive;

    if (steps == 0) {
        if (!(inst.start == inst.target)) {
            int z = m.add_var("z", 0, 0);
            m.add_con({{z, 1}}, IlpCmp::eq, 1, "end");
        }
        return m;
    }

    auto nm = [](const char* base, int i, int j, long pp) {
        std::string s = base;
        s += "_" + std::to_string(i);
        if (j >= 0) s += "_" + std::to_string(j);
        s += "_" + std::to_string(pp);
        return s;
    };

    // Declared step by step (x, indicators, then the step's jump block) so the
    // feasibility checker's propagation pins each block from the previous one.
    std::vector<std::vector<int>> x(steps + 1, std::vector<int>(d));
    std::vector<std::vector<std::vector<int>>> y(steps + 1);
    std::vector<std::vector<int>> w(steps + 1), wp(steps + 1), wpp(steps + 1), t(steps + 1);
    for (long pp = 1; pp <= steps; ++pp) {
        for (int i = 0; i < d; ++i)
            x[pp][i] = m.add_var(nm("x", i + 1, -1, pp), 0, long(p.classes[i].size()));
        if (want_def) {
            w[pp].resize(d);
            for (int i = 0; i < d; ++i) w[pp][i] = m.add_var(nm("w", i + 1, -1, pp), 0, 1);
        }
        if (want_off) {
            wp[pp].resize(d);
            wpp[pp].resize(d);
            for (int i = 0; i < d; ++i) wp[pp][i] = m.add_var(nm("wp", i + 1, -1, pp), 0, 1);
            for (int i = 0; i < d; ++i) wpp[pp][i] = m.add_var(nm("wpp", i + 1, -1, pp), 0, 1);
        }
        if (inst.variant.independent && mode == IlpMode::validated) {
            t[pp].resize(d);
            for (int i = 0; i < d; ++i) t[pp][i] = m.add_var(nm("t", i + 1, -1, pp), 0, 1);
        }
        y[pp].assign(d, std::vector<int>(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                y[pp][i][j] = m.add_var(nm("y", i + 1, j + 1, pp), 0, 1);
    }

    long nvert = g.vertex_count();
    auto class_count = [&](const VertexSet& s, int i) {
        long c = 0;
        for (int v : p.classes[i])
            if (s.test(v)) ++c;
        return c;
    };

    // one jump per step
    for (long pp = 1; pp <= steps; ++pp) {
        std::vector<std::pair<int, long>> terms;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) terms.push_back({y[pp][i][j], 1});
        m.add_con(std::move(terms), IlpCmp::le, 1, "one-step");
    }
    // start configuration
    for (int i = 0; i < d; ++i)
        m.add_con({{x[1][i], 1}}, IlpCmp::eq, class_count(inst.start, i), "start");
    // flow between consecutive configurations
    for (long pp = 1; pp + 1 <= steps; ++pp)
        for (int i = 0; i < d; ++i) {
            std::vector<std::pair<int, long>> terms{{x[pp + 1][i], 1}, {x[pp][i], -1}};
            for (int j = 0; j < d; ++j) {
                terms.push_back({y[pp][i][j], 1});
                terms.push_back({y[pp][j][i], -1});
            }
            m.add_con(std::move(terms), IlpCmp::eq, 0, "between");
        }
    // final configuration via the last jump block
    for (int i = 0; i < d; ++i) {
        std::vector<std::pair<int, long>> terms{{x[steps][i], 1}};
        for (int j = 0; j < d; ++j) {
            terms.push_back({y[steps][i][j], -1});
            terms.push_back({y[steps][j][i], 1});
        }
        m.add_con(std::move(terms), IlpCmp::eq, class_count(inst.target, i), "end");
    }
    // departing tokens need at least that many out-jumps
    for (int i = 0; i < d; ++i) {
        long departing = 0;
        for (int v : p.classes[i])
            if (inst.start.test(v) && !inst.target.test(v)) ++departing;
        std::vector<std::pair<int, long>> terms;
        for (long pp = 1; pp <= steps; ++pp)
            for (int j = 0; j < d; ++j) terms.push_back({y[pp][i][j], 1});
        m.add_con(std::move(terms), IlpCmp::ge, departing, "sort-class");
    }

    for (long pp = 1; pp <= steps; ++pp) {
        for (int i = 0; i < d; ++i) {
            long di = p.classes[i].empty() ? 0 : g.degree(p.classes[i][0]);
            long ci = p.internal_edges[i] ? 1 : 0;
            const auto& ni = p.class_adjacent[i];
            auto sum_neighbor_x = [&](long coef) {
                std::vector<std::pair<int, long>> terms;
                for (int j = 0; j < d; ++j)
                    if (ni[j]) terms.push_back({x[pp][j], coef});
                return terms;
            };
            if (want_def) {
                // defender row: active exactly when the class holds a token
                std::vector<std::pair<int, long>> terms = sum_neighbor_x(-2);
                if (mode == IlpMode::literal) {
                    terms.push_back({w[pp][i], di + 2 * ci});
                } else {
                    terms.push_back({w[pp][i], di + 2 * ci - 1});
                }
                m.add_con(std::move(terms), IlpCmp::le, 0, "defensive");
                m.add_con({{x[pp][i], 1}, {w[pp][i], -nvert}}, IlpCmp::le, 0, "w-upper");
                m.add_con({{w[pp][i], 1}, {x[pp][i], -1}}, IlpCmp::le, 0, "w-lower");
            }
            if (want_off) {
                std::vector<std::pair<int, long>> terms = sum_neighbor_x(-2);
                long coef = mode == IlpMode::literal ? di + 2 * ci + 1 : di + 1;
                terms.push_back({wp[pp][i], coef});
                terms.push_back({wpp[pp][i], coef});
                m.add_con(std::move(terms), IlpCmp::le, coef, "offensive");
                {
                    std::vector<std::pair<int, long>> up = sum_neighbor_x(1);
                    up.push_back({wp[pp][i], -nvert});
                    m.add_con(std::move(up), IlpCmp::le, 0, "wp-upper");
                    std::vector<std::pair<int, long>> lo = sum_neighbor_x(-1);
                    lo.push_back({wp[pp][i], 1});
                    m.add_con(std::move(lo), IlpCmp::le, 0, "wp-lower");
                }
                m.add_con({{x[pp][i], -1}, {wpp[pp][i], -nvert}}, IlpCmp::le,
                          -long(p.classes[i].size()), "wpp-upper");
                m.add_con({{wpp[pp][i], 1}, {x[pp][i], 1}}, IlpCmp::le, long(p.classes[i].size()),
                          "wpp-lower");
            }
            if (inst.variant.global) {
                if (mode == IlpMode::literal) {
                    std::vector<std::pair<int, long>> terms = sum_neighbor_x(1);
                    m.add_con(std::move(terms), IlpCmp::ge, 1, "global");
                } else {
                    std::vector<std::pair<int, long>> terms =
                        sum_neighbor_x(long(p.classes[i].size()));
                    terms.push_back({x[pp][i], 1});
                    m.add_con(std::move(terms), IlpCmp::ge, long(p.classes[i].size()), "global");
                }
            }
            if (inst.variant.independent) {
                if (mode == IlpMode::literal) {
                    std::vector<std::pair<int, long>> terms = sum_neighbor_x(nvert);
                    terms.push_back({x[pp][i], -1});
                    long ones = 0;
                    for (int j = 0; j < d; ++j)
                        if (ni[j]) ++ones;
                    m.add_con(std::move(terms), IlpCmp::le, nvert * ones * ci, "independent");
                } else {
                    m.add_con({{x[pp][i], 1}, {t[pp][i], -long(p.classes[i].size())}}, IlpCmp::le,
                              0, "independent-ind");
                    if (ci == 1)
                        m.add_con({{x[pp][i], 1}}, IlpCmp::le, 1, "independent-clique");
                    for (int j = i + 1; j < d; ++j)
                        if (ni[j])
                            m.add_con({{t[pp][i], 1}, {t[pp][j], 1}}, IlpCmp::le, 1,
                                      "independent-pair");
                }
            }
        }
    }

    if (mode == IlpMode::validated) {
        if (want_def) m.notes.push_back("defensive row rewritten: member self-count restored");
        if (want_off) m.notes.push_back("offensive row rewritten: clique surcharge dropped");
        if (inst.variant.global)
            m.notes.push_back("global row rewritten: fully occupied classes need no dominator");
        if (inst.variant.independent)
            m.notes.push_back("independence rows rewritten via occupancy indicators");
    }

    std::size_t cap = std::size_t(steps) * std::size_t(d) * std::size_t(d + 4);
    require_internal(m.vars.size() <= cap, "encode_ilp: variable budget exceeded");
    return m;
}

// Exhaustive feasibility check with interval pruning: variables are assigned
// in declaration order and a partial assignment is abandoned as soon as some
// constraint can no longer be met. The budget counts search nodes.
inline bool check_ilp_feasible_tiny(const IlpModel& m, std::uint64_t budget = 10'000'000) {
    int nv = int(m.vars.size());
    std::vector<long> val(nv, 0);
    // per-constraint bookkeeping: contribution interval of unassigned suffix
    std::uint64_t nodes = 0;

    auto consistent = [&](int assigned) {
        for (const auto& c : m.cons) {
            long lo = 0, hi = 0;
            for (auto [vi, coef] : c.terms) {
                if (vi < assigned) {
                    lo += coef * val[vi];
                    hi += coef * val[vi];
                } else {
                    long a = coef * m.vars[vi].lo, b = coef * m.vars[vi].hi;
                    lo += std::min(a, b);
                    hi += std::max(a, b);
                }
            }
            switch (c.cmp) {
            case IlpCmp::le:
                if (lo > c.rhs) return false;
                break;
            case IlpCmp::ge:
                if (hi < c.rhs) return false;
                break;
            case IlpCmp::eq:
                if (lo > c.rhs || hi < c.rhs) return false;
                break;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, int idx) -> bool {
        if (++nodes > budget) throw resource_error("check_ilp_feasible_tiny: budget exceeded");
        if (!consistent(idx)) return false;
        if (idx == nv) return true;
        for (long v = m.vars[idx].lo; v <= m.vars[idx].hi; ++v) {
            val[idx] = v;
            if (self(self, idx + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// LP-format text: constant-zero objective, rows, bounds, one General entry per
// variable. Byte-stable for identical models.
inline std::string export_lp(const IlpModel& m) {
    std::ostringstream os;
    os << "Minimize\n obj: 0\nSubject To\n";
    for (std::size_t i = 0; i < m.cons.size(); ++i) {
        const auto& c = m.cons[i];
        os << " c" << (i + 1) << ":";
        if (c.terms.empty()) os << " 0 x0";
        for (auto [vi, coef] : c.terms) {
            if (coef >= 0) os << " + " << coef;
            else os << " - " << -coef;
            os << " " << m.vars[vi].name;
        }
        switch (c.cmp) {
        case IlpCmp::le: os << " <= "; break;
        case IlpCmp::ge: os << " >= "; break;
        case IlpCmp::eq: os << " = "; break;
        }
        os << c.rhs << "\n";
    }
    os << "Bounds\n";
    for (const auto& v : m.vars) os << " " << v.lo << " <= " << v.name << " <= " << v.hi << "\n";
    os << "General\n";
    for (const auto& v : m.vars) os << " " << v.name << "\n";
    os << "End\n";
    return os.str();
}

} // namespace alre

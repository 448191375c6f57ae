#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "reconfig.hpp"

namespace alre {

struct SearchLimits {
    std::uint64_t state_budget = 10'000'000;
    std::optional<long> move_bound;
};

// A single reconfiguration move relative to an implicit current configuration.
// from == 0: token addition; to == 0: token removal; both nonzero: jump/slide.
struct Move {
    int from = 0;
    int to = 0;
};

// Incremental variant check for configurations one move apart. rebase() pins a
// base configuration (assumed valid); the after_* predicates answer whether the
// moved configuration still satisfies the variant, touching only the
// neighborhoods of the moved vertices. Cross-checked against satisfies() in the
// test suite.
class StepChecker {
public:
    StepChecker(const Graph& g, Variant variant) : g_(&g), var_(variant) {
        int n = g.vertex_count();
        in_a_.assign(n + 1, 0);
        cov_.assign(n + 1, 0);
    }

    const Variant& variant() const { return var_; }

    void rebase(const VertexSet& a) {
        base_ = a;
        const Graph& g = *g_;
        std::fill(in_a_.begin(), in_a_.end(), 0);
        std::fill(cov_.begin(), cov_.end(), 0);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            in_a_[v] = VertexSet::intersection_count(g.neighbors(v), a);
            cov_[v] = in_a_[v] + (a.test(v) ? 1 : 0);
        }
    }

    bool after_jump(int from, int to) const {
        const Graph& g = *g_;
        bool def = var_.base != AllianceBase::offensive;
        bool off = var_.base != AllianceBase::defensive;
        if (var_.independent) {
            int in = in_a_[to] - (g.adjacent(to, from) ? 1 : 0);
            if (in != 0) return false;
        }
        if (def) {
            // members that lost a neighbor, plus the arriving token
            if (!def_ok(to, in_a_[to] - (g.adjacent(to, from) ? 1 : 0))) return false;
            const VertexSet& nf = g.neighbors(from);
            for (int w = nf.first(); w != 0; w = nf.next(w)) {
                if (w == to || !base_.test(w)) continue;
                if (g.adjacent(w, to)) continue; // net unchanged
                if (!def_ok(w, in_a_[w] - 1)) return false;
            }
        }
        if (off) {
            // outsiders near `to` gained support, outsiders near `from` lost it,
            // and `from` itself joins the boundary if it still sees a token.
            const VertexSet& nt = g.neighbors(to);
            for (int w = nt.first(); w != 0; w = nt.next(w)) {
                if (w == from || (base_.test(w) && w != from)) continue;
                int in = in_a_[w] + 1 - (g.adjacent(w, from) ? 1 : 0);
                if (in > 0 && !off_ok(w, in)) return false;
            }
            const VertexSet& nf = g.neighbors(from);
            for (int w = nf.first(); w != 0; w = nf.next(w)) {
                if (w == to || base_.test(w)) continue;
                if (g.adjacent(w, to)) continue;
                int in = in_a_[w] - 1;
                if (in > 0 && !off_ok(w, in)) return false;
            }
            int in_from = in_a_[from] + (g.adjacent(from, to) ? 1 : 0);
            if (in_from > 0 && !off_ok(from, in_from)) return false;
        }
        if (var_.global) {
            const VertexSet& nf = g.neighbors(from);
            if (cov_[from] - 1 + (g.adjacent(from, to) || from == to ? 1 : 0) == 0) return false;
            for (int w = nf.first(); w != 0; w = nf.next(w))
                if (cov_[w] == 1 && w != to && !g.adjacent(w, to)) return false;
        }
        return true;
    }

    bool after_add(int v) const {
        const Graph& g = *g_;
        if (var_.independent && in_a_[v] != 0) return false;
        if (var_.base != AllianceBase::offensive) {
            if (!def_ok(v, in_a_[v])) return false;
        }
        if (var_.base != AllianceBase::defensive) {
            const VertexSet& nv = g.neighbors(v);
            for (int w = nv.first(); w != 0; w = nv.next(w)) {
                if (base_.test(w)) continue;
                if (!off_ok(w, in_a_[w] + 1)) return false;
            }
        }
        return true; // domination only improves
    }

    bool after_remove(int v) const {
        const Graph& g = *g_;
        if (var_.base != AllianceBase::offensive) {
            const VertexSet& nv = g.neighbors(v);
            for (int w = nv.first(); w != 0; w = nv.next(w)) {
                if (!base_.test(w)) continue;
                if (!def_ok(w, in_a_[w] - 1)) return false;
            }
        }
        if (var_.base != AllianceBase::defensive) {
            const VertexSet& nv = g.neighbors(v);
            for (int w = nv.first(); w != 0; w = nv.next(w)) {
                if (base_.test(w)) continue;
                int in = in_a_[w] - 1;
                if (in > 0 && !off_ok(w, in)) return false;
            }
            if (in_a_[v] > 0 && !off_ok(v, in_a_[v])) return false;
        }
        if (var_.global) {
            if (cov_[v] == 1) return false;
            const VertexSet& nv = g.neighbors(v);
            for (int w = nv.first(); w != 0; w = nv.next(w))
                if (cov_[w] == 1) return false;
        }
        return true; // independence only improves
    }

    bool after_move(const Move& m) const {
        if (m.from != 0 && m.to != 0) return after_jump(m.from, m.to);
        if (m.to != 0) return after_add(m.to);
        return after_remove(m.from);
    }

private:
    bool def_ok(int v, int in) const { return 2 * in + 1 >= g_->degree(v); }
    bool off_ok(int v, int in) const { return 2 * in >= g_->degree(v) + 1; }

    const Graph* g_;
    Variant var_;
    VertexSet base_;
    std::vector<int> in_a_; // |N(v) ∩ A|
    std::vector<int> cov_;  // |N[v] ∩ A|
};

inline VertexSet apply_move(const VertexSet& a, const Move& m) {
    VertexSet b = a;
    if (m.from != 0) b.reset(m.from);
    if (m.to != 0) b.set(m.to);
    return b;
}

// Same interface as StepChecker, but the maintained property is plain
// domination (the reduction source problem works over dominating sets).
class DominationChecker {
public:
    explicit DominationChecker(const Graph& g) : g_(&g) {
        cov_.assign(g.vertex_count() + 1, 0);
    }

    void rebase(const VertexSet& a) {
        const Graph& g = *g_;
        for (int v = 1; v <= g.vertex_count(); ++v)
            cov_[v] = VertexSet::intersection_count(g.neighbors(v), a) + (a.test(v) ? 1 : 0);
    }

    bool after_jump(int from, int to) const {
        const Graph& g = *g_;
        if (cov_[from] - 1 + (g.adjacent(from, to) ? 1 : 0) == 0) return false;
        const VertexSet& nf = g.neighbors(from);
        for (int w = nf.first(); w != 0; w = nf.next(w))
            if (cov_[w] == 1 && w != to && !g.adjacent(w, to)) return false;
        return true;
    }
    bool after_add(int) const { return true; }
    bool after_remove(int v) const {
        const Graph& g = *g_;
        if (cov_[v] == 1) return false;
        const VertexSet& nv = g.neighbors(v);
        for (int w = nv.first(); w != 0; w = nv.next(w))
            if (cov_[w] == 1) return false;
        return true;
    }
    bool after_move(const Move& m) const {
        if (m.from != 0 && m.to != 0) return after_jump(m.from, m.to);
        if (m.to != 0) return after_add(m.to);
        return after_remove(m.from);
    }

private:
    const Graph* g_;
    std::vector<int> cov_;
};

// BFS over the implicit reconfiguration graph. The emitter fills `out` with
// candidate moves for the passed configuration; the engine validity-filters
// them through the checker (any type with rebase/after_move), visits
// successors in canonical order (so witnesses are deterministic), and
// reconstructs a minimum-move witness via parent links.
//
// Throws resource_error when more than limits.state_budget configurations get
// stored; exhausting the frontier within budget is a genuine "unreachable".
template <class Checker, class Emitter>
Outcome bfs_search(Checker& checker, const MoveRule& rule, const VertexSet& start,
                   const VertexSet& target, const SearchLimits& limits, Emitter&& emit) {
    Outcome out;
    SearchStats& st = out.stats;
    if (limits.move_bound && *limits.move_bound < 0) return out;
    if (start == target) {
        out.reachable = true;
        out.min_moves = 0;
        out.witness = Sequence{{start}};
        out.stats.visited = 1;
        return out;
    }

    std::vector<VertexSet> states;
    std::vector<int> parent;
    std::vector<long> depth;
    std::unordered_map<VertexSet, int, VertexSetHash> seen;

    auto push_state = [&](const VertexSet& s, int par, long d) {
        states.push_back(s);
        parent.push_back(par);
        depth.push_back(d);
        seen.emplace(s, int(states.size()) - 1);
        if (++st.visited > limits.state_budget)
            throw resource_error("search: state budget exceeded");
    };
    push_state(start, -1, 0);

    std::vector<Move> moves;
    std::vector<VertexSet> nexts;

    std::size_t head = 0;
    int goal = -1;
    while (head < states.size() && goal < 0) {
        int cur = int(head++);
        if (limits.move_bound && depth[cur] >= *limits.move_bound) continue;
        VertexSet a = states[cur];
        checker.rebase(a);
        moves.clear();
        emit(a, moves);
        ++st.expanded;
        st.generated += moves.size();
        st.max_branch = std::max(st.max_branch, moves.size());

        nexts.clear();
        for (const Move& m : moves) {
            if (rule.kind == MoveKind::tar) {
                int sz = a.count() + (m.to != 0 ? 1 : -1);
                if (sz > rule.cap) continue;
            }
            if (!checker.after_move(m)) continue;
            nexts.push_back(apply_move(a, m));
        }
        std::sort(nexts.begin(), nexts.end(), VertexSet::canonical_less);
        for (const VertexSet& b : nexts) {
            if (seen.count(b)) continue;
            push_state(b, cur, depth[cur] + 1);
            if (b == target) {
                goal = int(states.size()) - 1;
                break;
            }
        }
    }

    if (goal < 0) return out;
    out.reachable = true;
    out.min_moves = depth[goal];
    Sequence w;
    for (int i = goal; i >= 0; i = parent[i]) w.configs.push_back(states[i]);
    std::reverse(w.configs.begin(), w.configs.end());
    out.witness = std::move(w);
    return out;
}

// Move emitters for the unrestricted reconfiguration relation, optionally
// confined to a ground set of allowed token positions.
inline void emit_all_moves(const Graph& g, const MoveRule& rule, const VertexSet& a,
                           std::vector<Move>& out, const VertexSet* ground = nullptr) {
    int n = g.vertex_count();
    auto allowed = [&](int v) { return ground == nullptr || ground->test(v); };
    switch (rule.kind) {
    case MoveKind::tar:
        for (int u = 1; u <= n; ++u)
            if (!a.test(u) && allowed(u)) out.push_back({0, u});
        for (int v = a.first(); v != 0; v = a.next(v)) out.push_back({v, 0});
        break;
    case MoveKind::tj:
        for (int v = a.first(); v != 0; v = a.next(v))
            for (int u = 1; u <= n; ++u)
                if (!a.test(u) && allowed(u)) out.push_back({v, u});
        break;
    case MoveKind::ts:
        for (int v = a.first(); v != 0; v = a.next(v)) {
            const VertexSet& nv = g.neighbors(v);
            for (int u = nv.first(); u != 0; u = nv.next(u))
                if (!a.test(u) && allowed(u)) out.push_back({v, u});
        }
        break;
    }
}

} // namespace alre

#pragma once

#include "oracle.hpp"

namespace alre {

struct RmiCounterexample {
    VertexSet from;
    VertexSet to;
    int added = 0; // the jumped-to vertex whose union breaks the property
};

// A property is reconfiguration monotone increasing (rmi) when for every
// property-preserving jump a -> b with v in b\a, the union a ∪ {v} also has
// the property. Exhaustively enumerates jumps between valid configurations and
// returns the first violation found, or nothing. (The decreasing counterpart,
// where a \ {v} keeps the property, exists symmetrically; nothing in this
// toolkit relies on it.)
inline std::optional<RmiCounterexample> check_rmi(const Graph& g, const Variant& variant,
                                                  std::uint64_t budget = 10'000'000) {
    int n = g.vertex_count();
    auto configs = enumerate_configs(g, variant, 0, n, budget);
    std::uint64_t examined = 0;
    for (const VertexSet& a : configs) {
        for (int v = a.first(); v != 0; v = a.next(v)) {
            for (int u = 1; u <= n; ++u) {
                if (a.test(u)) continue;
                if (++examined > budget) throw resource_error("check_rmi: budget exceeded");
                VertexSet b = a;
                b.reset(v);
                b.set(u);
                if (!satisfies(g, b, variant)) continue;
                VertexSet uni = a;
                uni.set(u);
                if (!satisfies(g, uni, variant)) return RmiCounterexample{a, b, u};
            }
        }
    }
    return std::nullopt;
}

namespace detail {

inline void dedupe_keep_first(std::vector<VertexSet>& cs) {
    for (std::size_t i = 0; i < cs.size(); ++i) {
        for (std::size_t j = cs.size(); j-- > i + 1;) {
            if (cs[j] == cs[i]) {
                cs.erase(cs.begin() + long(i) + 1, cs.begin() + long(j) + 1);
                break;
            }
        }
    }
}

inline int single_vertex(const VertexSet& s, const char* what) {
    require_internal(s.count() == 1, std::string(what) + ": expected singleton difference");
    return s.first();
}

} // namespace detail

// Converts a TJ witness of an rmi variant into a TAR witness with threshold
// k+1: each jump becomes add-then-remove through the union configuration.
// Exactly 2 * (input moves) moves.
inline Sequence tj_to_tar(const Graph& g, const Variant& variant, const Sequence& seq) {
    if (variant.independent)
        throw misuse_error("tj_to_tar: independent offensive variant is not rmi; use the bridge");
    (void)g;
    Sequence out;
    if (seq.configs.empty()) return out;
    out.configs.push_back(seq.configs.front());
    for (std::size_t i = 1; i < seq.configs.size(); ++i) {
        const VertexSet& a = seq.configs[i - 1];
        const VertexSet& b = seq.configs[i];
        int u = detail::single_vertex(difference(b, a), "tj_to_tar");
        VertexSet mid = a;
        mid.set(u);
        out.configs.push_back(mid);
        out.configs.push_back(b);
    }
    return out;
}

// Converts a TAR witness (threshold k+1, size-k endpoints) of an rmi variant
// back into a TJ witness with at most half the moves, rounded up: duplicates
// are cut keeping first occurrences, minima below k are lifted through the rmi
// union, and the alternating k/(k+1) sequence is subsampled at size k.
inline Sequence tar_to_tj(const Graph& g, const Variant& variant, int k, const Sequence& seq) {
    if (variant.independent)
        throw misuse_error("tar_to_tj: independent offensive variant is not rmi; use the bridge");
    std::vector<VertexSet> cs = seq.configs;
    require_internal(!cs.empty(), "tar_to_tj: empty sequence");
    require_internal(cs.front().count() == k && cs.back().count() == k,
                     "tar_to_tj: endpoints must have k tokens");
    detail::dedupe_keep_first(cs);
    std::size_t fuel = cs.size() * std::size_t(k + 2) + 64;
    while (true) {
        require_internal(fuel-- > 0, "tar_to_tj: normalization did not converge");
        std::size_t best = 0;
        int best_size = k;
        for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
            int sz = cs[i].count();
            if (sz < best_size) {
                best_size = sz;
                best = i;
            }
        }
        if (best == 0) break;
        // a strict interior minimum: removal into it, addition out of it
        const VertexSet& prev = cs[best - 1];
        const VertexSet& next = cs[best + 1];
        int u = detail::single_vertex(difference(prev, cs[best]), "tar_to_tj");
        int v = detail::single_vertex(difference(next, cs[best]), "tar_to_tj");
        if (u == v) {
            cs.erase(cs.begin() + long(best), cs.begin() + long(best) + 2);
        } else {
            VertexSet lifted = prev;
            lifted.set(v);
            require_internal(satisfies(g, lifted, variant),
                             "tar_to_tj: rmi union failed the variant");
            cs[best] = lifted;
        }
        detail::dedupe_keep_first(cs);
    }
    Sequence out;
    for (std::size_t i = 0; i < cs.size(); i += 2) {
        require_internal(cs[i].count() == k, "tar_to_tj: unexpected size pattern");
        out.configs.push_back(cs[i]);
    }
    return out;
}

enum class BridgeDirection { tj_to_tar, tar_to_tj };

namespace detail {

struct TarStep {
    bool removal = false;
    int vertex = 0;
};

inline TarStep classify_tar_step(const VertexSet& a, const VertexSet& b) {
    VertexSet rem = difference(a, b);
    VertexSet add = difference(b, a);
    if (rem.count() == 1 && add.empty()) return {true, rem.first()};
    if (add.count() == 1 && rem.empty()) return {false, add.first()};
    throw misuse_error("bridge: input is not a token addition/removal sequence");
}

} // namespace detail

// The independent-offensive TJ<->TAR bridge. Jumps across non-adjacent vertices
// convert like the rmi case (add then remove); jumps along an edge are slides
// over isolated edges and convert to remove-then-add on that edge. The reverse
// direction normalizes: duplicates cut, isolated-edge remove/add pairs commuted
// toward the front (their component is disjoint from everything else), minima
// below k-1 lifted, then the walk is subsampled at its size-k configurations.
inline Sequence idp_oa_tar_tj_bridge(const Graph& g, const Sequence& seq,
                                     BridgeDirection direction) {
    Variant variant{AllianceBase::offensive, false, true};
    if (seq.configs.empty()) throw misuse_error("bridge: empty sequence");
    for (const auto& c : seq.configs)
        if (!satisfies(g, c, variant))
            throw misuse_error("bridge: a configuration is not an independent offensive alliance");

    if (direction == BridgeDirection::tj_to_tar) {
        Sequence out;
        out.configs.push_back(seq.configs.front());
        for (std::size_t i = 1; i < seq.configs.size(); ++i) {
            const VertexSet& a = seq.configs[i - 1];
            const VertexSet& b = seq.configs[i];
            int u = detail::single_vertex(difference(a, b), "bridge");
            int v = detail::single_vertex(difference(b, a), "bridge");
            VertexSet mid = a;
            if (g.adjacent(u, v)) {
                mid.reset(u); // slide along an isolated edge: vacate first
            } else {
                mid.set(v);
            }
            out.configs.push_back(mid);
            out.configs.push_back(b);
        }
        return out;
    }

    std::vector<VertexSet> cs = seq.configs;
    int k = cs.front().count();
    require_internal(cs.back().count() == k, "bridge: endpoint sizes differ");
    detail::dedupe_keep_first(cs);
    // Configurations before `settled` belong to already-normalized front swaps;
    // later swaps bubble down to the settled frontier but never through it.
    std::size_t settled = 0;
    std::size_t fuel = (cs.size() + 4) * (cs.size() + 4) * std::size_t(k + 2);
    while (true) {
        require_internal(fuel-- > 0, "bridge: normalization did not converge");
        bool changed = false;
        for (std::size_t i = settled + 1; i + 1 < cs.size(); ++i) {
            auto s1 = detail::classify_tar_step(cs[i - 1], cs[i]);
            auto s2 = detail::classify_tar_step(cs[i], cs[i + 1]);
            if (!(s1.removal && !s2.removal)) continue;
            int u = s1.vertex, v = s2.vertex;
            if (u == v || !g.adjacent(u, v)) continue;
            if (i == settled + 1) {
                settled += 2;
                changed = true;
                break;
            }
            auto mu = detail::classify_tar_step(cs[i - 2], cs[i - 1]);
            if (!mu.removal && mu.vertex == u) {
                // +u directly before -u: the detour cancels
                cs.erase(cs.begin() + long(i) - 1, cs.begin() + long(i) + 1);
                std::size_t before = cs.size();
                detail::dedupe_keep_first(cs);
                if (cs.size() != before) settled = 0;
            } else if (mu.removal && mu.vertex == v) {
                // -v, -u, +v collapses to the single removal of u
                cs.erase(cs.begin() + long(i) - 1, cs.begin() + long(i) + 1);
                std::size_t before = cs.size();
                detail::dedupe_keep_first(cs);
                if (cs.size() != before) settled = 0;
            } else {
                // the swap's component is disjoint from mu's move: commute
                VertexSet c1 = cs[i - 2];
                c1.reset(u);
                VertexSet c2 = c1;
                c2.set(v);
                cs[i - 1] = c1;
                cs[i] = c2;
                std::size_t before = cs.size();
                detail::dedupe_keep_first(cs);
                if (cs.size() != before) settled = 0;
            }
            changed = true;
            break;
        }
        if (changed) continue;

        // lift interior minima below k-1 (their in/out vertices are
        // non-adjacent once the commuting pass is exhausted)
        std::size_t best = 0;
        int best_size = k - 1;
        for (std::size_t i = 1; i + 1 < cs.size(); ++i) {
            int sz = cs[i].count();
            if (sz < best_size) {
                best_size = sz;
                best = i;
            }
        }
        if (best == 0) break;
        const VertexSet& prev = cs[best - 1];
        const VertexSet& next = cs[best + 1];
        int u = detail::single_vertex(difference(prev, cs[best]), "bridge");
        int v = detail::single_vertex(difference(next, cs[best]), "bridge");
        if (u == v) {
            cs.erase(cs.begin() + long(best), cs.begin() + long(best) + 2);
        } else {
            require_internal(!g.adjacent(u, v), "bridge: adjacent pair at a deep minimum");
            VertexSet lifted = prev;
            lifted.set(v);
            require_internal(satisfies(g, lifted, variant), "bridge: lifted set is invalid");
            cs[best] = lifted;
        }
        std::size_t before = cs.size();
        detail::dedupe_keep_first(cs);
        if (cs.size() != before) settled = 0;
    }

    Sequence out;
    for (const auto& c : cs)
        if (c.count() == k) out.configs.push_back(c);
    // self-check: the subsampled walk must be a valid TJ sequence
    Instance probe{g, out.configs.front(), out.configs.back(), variant, MoveRule{MoveKind::tj, 0},
                   std::nullopt};
    if (auto bad = validate_sequence(probe, out))
        throw internal_error("bridge: produced an invalid jump sequence at index " +
                             std::to_string(bad->index));
    return out;
}

// A global independent offensive alliance admits no addition/removal step at
// all: removals break domination, additions break independence. Checked
// explicitly; serves as the frozen-reconfiguration-space test oracle.
inline bool gidp_oa_frozen(const Graph& g, const VertexSet& a) {
    Variant v{AllianceBase::offensive, true, true};
    if (!satisfies(g, a, v)) throw misuse_error("gidp_oa_frozen: not a global independent OA");
    for (int x = a.first(); x != 0; x = a.next(x)) {
        VertexSet b = a;
        b.reset(x);
        require_internal(!satisfies(g, b, v), "gidp_oa_frozen: removal preserved the property");
    }
    for (int x = 1; x <= g.vertex_count(); ++x) {
        if (a.test(x)) continue;
        VertexSet b = a;
        b.set(x);
        require_internal(!satisfies(g, b, v), "gidp_oa_frozen: addition preserved the property");
    }
    return true;
}

} // namespace alre

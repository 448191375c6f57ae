#pragma once

#include <string>

#include "reconfig.hpp"

namespace alre {

enum class ReductionTarget {
    da_ts,        // defensive, token sliding, chordal output
    oa_ts,        // offensive, token sliding, chordal output
    da_tj,        // defensive, token jumping, bipartite output
    oa_tj,        // offensive, token jumping, bipartite output
    goa_tj_bip,   // global offensive, token jumping, bipartite output
    goa_chordal,  // global offensive, token sliding, chordal output
    idp_oa_tj,    // independent offensive, token jumping, bipartite output
    pa_tj,        // powerful, token jumping, bipartite output
    gpa_tj        // global powerful, token jumping, bipartite output
};

struct ReductionSpec {
    ReductionTarget target;

    bool expects_chordal() const {
        return target == ReductionTarget::da_ts || target == ReductionTarget::oa_ts ||
               target == ReductionTarget::goa_chordal;
    }
    static ReductionSpec parse(const std::string& name) {
        if (name == "da-ts") return {ReductionTarget::da_ts};
        if (name == "oa-ts") return {ReductionTarget::oa_ts};
        if (name == "da-tj") return {ReductionTarget::da_tj};
        if (name == "oa-tj") return {ReductionTarget::oa_tj};
        if (name == "g-oa-tj-bip") return {ReductionTarget::goa_tj_bip};
        if (name == "g-oa-chordal") return {ReductionTarget::goa_chordal};
        if (name == "idp-oa-tj") return {ReductionTarget::idp_oa_tj};
        if (name == "pa-tj") return {ReductionTarget::pa_tj};
        if (name == "g-pa-tj") return {ReductionTarget::gpa_tj};
        throw malformed_input_error("unknown reduction target '" + name + "'");
    }
    std::string to_string() const {
        switch (target) {
        case ReductionTarget::da_ts: return "da-ts";
        case ReductionTarget::oa_ts: return "oa-ts";
        case ReductionTarget::da_tj: return "da-tj";
        case ReductionTarget::oa_tj: return "oa-tj";
        case ReductionTarget::goa_tj_bip: return "g-oa-tj-bip";
        case ReductionTarget::goa_chordal: return "g-oa-chordal";
        case ReductionTarget::idp_oa_tj: return "idp-oa-tj";
        case ReductionTarget::pa_tj: return "pa-tj";
        default: return "g-pa-tj";
        }
    }
};

// A constructed instance plus the vertex-name bookkeeping needed to translate
// alliance sequences back into dominating-set sequences.
struct ReducedInstance {
    Instance instance;
    std::vector<std::string> names; // reduced vertex id -> descriptive name
    std::vector<int> token_layer;   // seed vertex -> its copy in the token layer
    int seed_n = 0;
};

namespace detail {

// Incremental builder with deterministic ids: vertices are numbered in the
// order the construction introduces its layers.
struct GadgetBuilder {
    std::vector<std::string> names{""};
    std::vector<std::pair<int, int>> edges;

    int add(const std::string& name) {
        names.push_back(name);
        return int(names.size()) - 1;
    }
    std::vector<int> add_layer(const std::string& prefix, int count) {
        std::vector<int> ids(count + 1, 0);
        for (int v = 1; v <= count; ++v) ids[v] = add(prefix + std::to_string(v));
        return ids;
    }
    void link(int u, int v) { edges.emplace_back(u, v); }
    void link_clique(const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) link(vs[i], vs[j]);
    }
    Graph build() const { return Graph::build(int(names.size()) - 1, edges); }
};

inline std::vector<int> live(const std::vector<int>& layer) {
    std::vector<int> out;
    for (std::size_t v = 1; v < layer.size(); ++v)
        if (layer[v] != 0) out.push_back(layer[v]);
    return out;
}

inline void require_no_isolates(const Graph& g, const char* what) {
    if (!g.isolates().empty())
        throw malformed_input_error(std::string(what) + ": seed graph must have no isolates");
}

} // namespace detail

// Builds the alliance reconfiguration instance a dominating-set reconfiguration
// seed maps to. Layer naming follows the construction: v<q> copies of seed
// vertex v, m... gadget vertices, plus the construction's special vertices.
inline ReducedInstance reduce(const ReductionSpec& spec, const Graph& g, const VertexSet& d_s,
                              const VertexSet& d_t) {
    if (!is_dominating(g, d_s)) throw malformed_input_error("reduce: start is not dominating");
    if (!is_dominating(g, d_t)) throw malformed_input_error("reduce: target is not dominating");
    if (d_s.count() != d_t.count()) throw malformed_input_error("reduce: endpoint sizes differ");
    int n = g.vertex_count();
    int k = d_s.count();
    detail::GadgetBuilder b;
    ReducedInstance out;
    out.seed_n = n;

    auto copy_layer = [&](int q) {
        std::vector<int> ids(n + 1, 0);
        for (int v = 1; v <= n; ++v) ids[v] = b.add("v" + std::to_string(q) + ":" + std::to_string(v));
        return ids;
    };

    VertexSet start, target;
    Variant variant;
    MoveRule rule;

    switch (spec.target) {
    case ReductionTarget::da_ts: {
        detail::require_no_isolates(g, "da-ts");
        auto v1 = copy_layer(1), v2 = copy_layer(2), v3 = copy_layer(3);
        // m[v][j][p] for j in [d(v)], p in [6]
        std::vector<std::vector<std::vector<int>>> m(n + 1);
        for (int v = 1; v <= n; ++v) {
            m[v].assign(g.degree(v) + 1, std::vector<int>(7, 0));
            for (int j = 1; j <= g.degree(v); ++j)
                for (int p = 1; p <= 6; ++p)
                    m[v][j][p] = b.add("m:" + std::to_string(v) + ":" + std::to_string(j) + ":" +
                                       std::to_string(p));
        }
        std::vector<int> clique = detail::live(v1);
        for (int x : detail::live(v3)) clique.push_back(x);
        b.link_clique(clique);
        for (int v = 1; v <= n; ++v)
            for (int j = 1; j <= g.degree(v); ++j) {
                for (int p : {2, 4, 5, 6}) b.link(m[v][j][1], m[v][j][p]);
                b.link(m[v][j][2], m[v][j][3]);
            }
        for (int v = 1; v <= n; ++v) {
            b.link(v1[v], v2[v]);
            const VertexSet& nv = g.neighbors(v);
            for (int u = nv.first(); u != 0; u = nv.next(u)) b.link(v1[v], v2[u]);
            for (int j = 1; j <= g.degree(v) - 1; ++j) b.link(v2[v], m[v][j][1]);
            b.link(v3[v], m[v][g.degree(v)][1]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int v = 1; v <= n; ++v) {
                if (d.test(v)) a.set(v1[v]);
                a.set(v2[v]);
                a.set(v3[v]);
                for (int j = 1; j <= g.degree(v); ++j) {
                    a.set(m[v][j][1]);
                    a.set(m[v][j][2]);
                }
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::defensive, false, false};
        rule = {MoveKind::ts, 0};
        out.token_layer = v1;
        break;
    }
    case ReductionTarget::oa_ts: {
        std::vector<std::vector<int>> v(15);
        for (int q = 1; q <= 14; ++q) v[q] = copy_layer(q);
        std::vector<std::vector<int>> m(n + 1);
        for (int x = 1; x <= n; ++x) {
            m[x].assign(g.degree(x) + 2, 0);
            for (int j = 1; j <= g.degree(x) + 1; ++j)
                m[x][j] = b.add("m:" + std::to_string(x) + ":" + std::to_string(j));
        }
        std::vector<int> clique = detail::live(v[1]);
        for (int x : detail::live(v[2])) clique.push_back(x);
        for (int x : detail::live(v[7])) clique.push_back(x);
        b.link_clique(clique);
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[12][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) b.link(v[1][x], v[12][u]);
            for (int q : {2, 7}) {
                b.link(v[q][x], v[q + 1][x]);
                b.link(v[q + 1][x], v[q + 2][x]);
                b.link(v[q + 1][x], v[q + 3][x]);
                b.link(v[q + 3][x], v[q + 4][x]);
            }
            b.link(v[12][x], v[13][x]);
            b.link(v[13][x], v[14][x]);
            for (int j = 1; j <= g.degree(x) + 1; ++j) b.link(v[12][x], m[x][j]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[2][x]);
                a.set(v[4][x]);
                a.set(v[7][x]);
                a.set(v[9][x]);
                for (int j = 1; j <= g.degree(x) + 1; ++j) a.set(m[x][j]);
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::offensive, false, false};
        rule = {MoveKind::ts, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::da_tj: {
        detail::require_no_isolates(g, "da-tj");
        std::vector<std::vector<int>> v(7);
        for (int q = 1; q <= 6; ++q) v[q] = copy_layer(q);
        int a_vx = b.add("a");
        for (auto [x, u] : g.edges()) {
            b.link(v[1][x], v[2][u]);
            b.link(v[1][u], v[2][x]);
            b.link(v[3][x], v[2][u]);
            b.link(v[3][u], v[2][x]);
            b.link(v[3][x], v[5][u]);
            b.link(v[3][u], v[5][x]);
        }
        for (int x = 1; x <= n; ++x)
            for (int u = 1; u <= n; ++u) {
                b.link(v[4][x], v[5][u]);
                b.link(v[6][x], v[5][u]);
            }
        for (int x = 1; x <= n; ++x) {
            b.link(v[3][x], a_vx);
            b.link(v[4][x], a_vx);
            b.link(v[1][x], v[2][x]);
            b.link(v[6][x], v[2][x]);
            b.link(v[3][x], v[5][x]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[2][x]);
                a.set(v[3][x]);
            }
            a.set(a_vx);
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::defensive, false, false};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::oa_tj: {
        std::vector<std::vector<int>> v(10);
        for (int q = 1; q <= 9; ++q) v[q] = copy_layer(q);
        int a_vx = b.add("a");
        int b_vx = b.add("b");
        b.link(a_vx, b_vx);
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[3][x]);
            b.link(v[2][x], v[3][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) {
                b.link(v[1][x], v[3][u]);
                b.link(v[2][x], v[3][u]);
            }
            b.link(v[2][x], b_vx);
            b.link(v[7][x], b_vx);
            b.link(v[4][x], v[3][x]);
            b.link(v[4][x], v[5][x]);
            b.link(v[6][x], v[5][x]);
            b.link(v[7][x], v[8][x]);
            b.link(v[9][x], v[8][x]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[2][x]);
            }
            a.set(a_vx);
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::offensive, false, false};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::goa_tj_bip: {
        detail::require_no_isolates(g, "g-oa-tj-bip");
        int kp = k + 3 * n;
        std::vector<std::vector<int>> v(6);
        for (int q = 1; q <= 5; ++q) v[q] = copy_layer(q);
        auto av = b.add_layer("a", 2 * kp + 1);
        auto bv = b.add_layer("b", 2 * kp + 1);
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[2][x]);
            b.link(v[3][x], v[2][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) {
                b.link(v[1][x], v[2][u]);
                b.link(v[3][x], v[2][u]);
            }
            for (int u = 1; u <= n; ++u) {
                b.link(v[1][x], v[4][u]);
                b.link(v[1][x], v[5][u]);
            }
            for (int j = 1; j <= 2 * kp + 1; ++j) {
                b.link(av[j], v[4][x]);
                b.link(av[j], v[5][x]);
                b.link(v[3][x], bv[j]);
            }
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[3][x]);
                a.set(v[4][x]);
                a.set(v[5][x]);
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::offensive, true, false};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::goa_chordal: {
        int kp = k + 4 * n + 2 * g.edge_count();
        std::vector<std::vector<int>> v(6);
        for (int q = 1; q <= 5; ++q) v[q] = copy_layer(q);
        auto av = b.add_layer("a", 2 * kp + 1);
        std::vector<std::vector<int>> m(n + 1);
        std::vector<std::vector<std::vector<int>>> mp(n + 1);
        for (int x = 1; x <= n; ++x) {
            m[x].assign(g.degree(x) + 2, 0);
            mp[x].assign(g.degree(x) + 2, std::vector<int>(2 * kp + 2, 0));
            for (int j = 1; j <= g.degree(x) + 1; ++j) {
                m[x][j] = b.add("m:" + std::to_string(x) + ":" + std::to_string(j));
                for (int p = 1; p <= 2 * kp + 1; ++p)
                    mp[x][j][p] = b.add("m:" + std::to_string(x) + ":" + std::to_string(j) + ":" +
                                        std::to_string(p));
            }
        }
        std::vector<int> clique = detail::live(v[1]);
        for (int q : {3, 4, 5})
            for (int x : detail::live(v[q])) clique.push_back(x);
        b.link_clique(clique);
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[2][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) b.link(v[1][x], v[2][u]);
            for (int j = 1; j <= g.degree(x) + 1; ++j) {
                b.link(v[2][x], m[x][j]);
                for (int p = 1; p <= 2 * kp + 1; ++p) b.link(m[x][j], mp[x][j][p]);
            }
            for (int p = 1; p <= 2 * kp + 1; ++p) {
                b.link(av[p], v[3][x]);
                b.link(av[p], v[4][x]);
                b.link(av[p], v[5][x]);
            }
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[3][x]);
                a.set(v[4][x]);
                a.set(v[5][x]);
                for (int j = 1; j <= g.degree(x) + 1; ++j) a.set(m[x][j]);
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::offensive, true, false};
        rule = {MoveKind::ts, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::idp_oa_tj: {
        std::vector<std::vector<int>> v(9);
        for (int q = 1; q <= 8; ++q) v[q] = copy_layer(q);
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[2][x]);
            b.link(v[3][x], v[2][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) {
                b.link(v[1][x], v[2][u]);
                b.link(v[3][x], v[2][u]);
            }
            b.link(v[3][x], v[5][x]);
            for (int q : {4, 5, 6, 7}) b.link(v[q][x], v[q + 1][x]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[3][x]);
                a.set(v[4][x]);
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::offensive, false, true};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::pa_tj: {
        detail::require_no_isolates(g, "pa-tj");
        std::vector<std::vector<int>> v(4);
        for (int q = 1; q <= 3; ++q) v[q] = copy_layer(q);
        // m[x][p][j] for p in {2,3}, j in [6]
        std::vector<std::vector<std::vector<int>>> m(n + 1);
        for (int x = 1; x <= n; ++x) {
            m[x].assign(4, std::vector<int>(7, 0));
            for (int p : {2, 3})
                for (int j = 1; j <= 6; ++j)
                    m[x][p][j] = b.add("m:" + std::to_string(x) + ":" + std::to_string(p) + ":" +
                                       std::to_string(j));
        }
        for (auto [x, u] : g.edges()) {
            b.link(v[1][x], v[2][u]);
            b.link(v[1][u], v[2][x]);
            b.link(v[3][x], v[2][u]);
            b.link(v[3][u], v[2][x]);
        }
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], v[2][x]);
            for (int p : {2, 3}) {
                b.link(v[p][x], m[x][p][1]);
                b.link(m[x][p][1], m[x][p][2]);
                b.link(m[x][p][1], m[x][p][3]);
                b.link(m[x][p][3], m[x][p][4]);
                b.link(m[x][p][4], m[x][p][5]);
                b.link(m[x][p][5], m[x][p][6]);
                b.link(m[x][p][6], m[x][p][3]);
            }
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[2][x]);
                a.set(v[3][x]);
                for (int p : {2, 3}) a.set(m[x][p][2]);
            }
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::powerful, false, false};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    case ReductionTarget::gpa_tj: {
        detail::require_no_isolates(g, "g-pa-tj");
        if (k < 1 || k > n - 2)
            throw malformed_input_error("g-pa-tj: needs 1 <= k <= n-2 (other seeds are trivial)");
        std::vector<std::vector<int>> v(6);
        for (int q = 1; q <= 5; ++q) v[q] = copy_layer(q);
        std::vector<std::vector<int>> m(n + 1);
        for (int x = 1; x <= n; ++x) {
            m[x].assign(g.degree(x) + 3, 0);
            for (int j = 1; j <= g.degree(x) + 2; ++j)
                m[x][j] = b.add("m:" + std::to_string(x) + ":" + std::to_string(j));
        }
        int a_vx = b.add("a");
        auto bv = b.add_layer("b", n);
        auto cv = b.add_layer("c", 2 * (n - k));
        for (int x = 1; x <= n; ++x) {
            b.link(v[1][x], a_vx);
            b.link(v[4][x], v[2][x]);
            b.link(v[5][x], v[2][x]);
            b.link(v[1][x], v[2][x]);
            b.link(v[3][x], v[2][x]);
            const VertexSet& nx = g.neighbors(x);
            for (int u = nx.first(); u != 0; u = nx.next(u)) {
                b.link(v[1][x], v[2][u]);
                b.link(v[3][x], v[2][u]);
            }
            for (int j = 1; j <= g.degree(x) + 2; ++j) b.link(v[3][x], m[x][j]);
        }
        for (int j = 1; j <= n; ++j) b.link(bv[j], a_vx);
        for (int j = 1; j <= n - k; ++j) {
            b.link(bv[j], cv[2 * j - 1]);
            b.link(bv[j], cv[2 * j]);
        }
        Graph gt = b.build();
        auto a_of = [&](const VertexSet& d) {
            VertexSet a(gt.vertex_count());
            for (int x = 1; x <= n; ++x) {
                if (d.test(x)) a.set(v[1][x]);
                a.set(v[2][x]);
                a.set(v[3][x]);
            }
            a.set(a_vx);
            for (int j = 1; j <= n - k; ++j) a.set(bv[j]);
            return a;
        };
        start = a_of(d_s);
        target = a_of(d_t);
        variant = {AllianceBase::powerful, true, false};
        rule = {MoveKind::tj, 0};
        out.token_layer = v[1];
        break;
    }
    }

    out.names = b.names;
    out.instance = Instance{b.build(), start, target, variant, rule, std::nullopt};
    out.instance.validate();
    return out;
}

inline ReducedInstance reduce(const ReductionSpec& spec, const DsInstance& seed) {
    ReducedInstance out = reduce(spec, seed.graph, seed.start, seed.target);
    out.instance.move_bound = seed.move_bound; // timed seeds keep their bound
    return out;
}

// Projects an alliance witness on the reduced instance back onto the token
// layer and drops the non-moves; the result is a dominating-set TJ sequence on
// the seed graph with the same number of effective moves.
inline Sequence pull_back(const ReducedInstance& red, const Graph& seed, const Sequence& witness) {
    if (witness.configs.empty()) throw misuse_error("pull_back: empty witness");
    Sequence out;
    for (const auto& cfg : witness.configs) {
        if (cfg.universe() != red.instance.graph.vertex_count())
            throw misuse_error("pull_back: witness universe mismatch");
        VertexSet d(seed.vertex_count());
        for (int v = 1; v <= seed.vertex_count(); ++v)
            if (cfg.test(red.token_layer[v])) d.set(v);
        if (!out.configs.empty() && out.configs.back() == d) continue;
        out.configs.push_back(d);
    }
    for (std::size_t i = 0; i < out.configs.size(); ++i) {
        if (!is_dominating(seed, out.configs[i]))
            throw misuse_error("pull_back: projected set is not dominating");
        if (i > 0) {
            VertexSet gone = difference(out.configs[i - 1], out.configs[i]);
            VertexSet came = difference(out.configs[i], out.configs[i - 1]);
            if (gone.count() != 1 || came.count() != 1)
                throw misuse_error("pull_back: projection is not a jump sequence");
        }
    }
    return out;
}

} // namespace alre

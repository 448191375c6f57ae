#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "easy.hpp"
#include "fpt.hpp"
#include "nd.hpp"
#include "reductions.hpp"

namespace alre::selftest {

using Failures = std::vector<std::string>;

// ---------------------------------------------------------------------------
// Graph sources for the sweeps.

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

template <class F>
void for_each_labeled_graph(int n, F&& f) {
    std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask));
}

inline std::vector<Graph> sample_graphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed + std::uint64_t(n) * 0x9e37u);
    std::vector<Graph> out;
    int pairs = n * (n - 1) / 2;
    for (int i = 0; i < count; ++i) {
        std::uint64_t mask = rng() & ((pairs >= 64 ? ~0ull : (1ull << pairs) - 1));
        out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

// Hand-picked structured graphs up to max_n vertices: paths, cycles, stars,
// double stars, cliques, complete bipartite, matchings and mixed unions.
inline std::vector<std::pair<std::string, Graph>> named_family(int max_n) {
    std::vector<std::pair<std::string, Graph>> out;
    auto add = [&](const std::string& name, int n, std::vector<std::pair<int, int>> es) {
        if (n <= max_n) out.emplace_back(name, Graph::build(n, es));
    };
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> path, cycle, clique, star;
        for (int v = 1; v < n; ++v) path.emplace_back(v, v + 1);
        add("P" + std::to_string(n), n, path);
        if (n >= 3) {
            cycle = path;
            cycle.emplace_back(n, 1);
            add("C" + std::to_string(n), n, cycle);
        }
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) clique.emplace_back(u, v);
        add("K" + std::to_string(n), n, clique);
        if (n >= 3) {
            for (int v = 2; v <= n; ++v) star.emplace_back(1, v);
            add("star" + std::to_string(n - 1), n, star);
        }
    }
    add("2K2", 4, {{1, 2}, {3, 4}});
    add("3K2", 6, {{1, 2}, {3, 4}, {5, 6}});
    add("4K2", 8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
    add("K2+K1", 3, {{1, 2}});
    add("2K2+K1", 5, {{1, 2}, {3, 4}});
    add("3K2+K1", 7, {{1, 2}, {3, 4}, {5, 6}});
    add("K13+K2", 6, {{1, 2}, {1, 3}, {1, 4}, {5, 6}});
    add("star3+2K2", 8, {{1, 2}, {1, 3}, {1, 4}, {5, 6}, {7, 8}});
    add("P4+K2", 6, {{1, 2}, {2, 3}, {3, 4}, {5, 6}});
    add("double-star", 6, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {4, 6}});
    add("K23", 5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    add("paw", 4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}});
    add("diamond", 4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {3, 4}});
    add("bull", 5, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {3, 5}});
    add("net", 6, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {2, 5}, {3, 6}});
    add("two-triangles", 6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    return out;
}

inline std::vector<Variant> all_variants() {
    return {
        {AllianceBase::defensive, false, false}, {AllianceBase::defensive, true, false},
        {AllianceBase::offensive, false, false}, {AllianceBase::offensive, true, false},
        {AllianceBase::offensive, false, true},  {AllianceBase::offensive, true, true},
        {AllianceBase::powerful, false, false},  {AllianceBase::powerful, true, false},
    };
}

// ---------------------------------------------------------------------------
// Independent re-evaluations used as oracles inside the sweeps. These work
// from scratch with adjacency lists and plain counters on purpose.

namespace naive {

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline bool satisfies_recheck(const Graph& g, const std::vector<int>& members,
                              const Variant& var) {
    auto adj = adjacency(g);
    std::vector<char> in(g.vertex_count() + 1, 0);
    for (int v : members) in[v] = 1;
    auto inside = [&](int v) {
        int c = 0;
        for (int u : adj[v]) c += in[u];
        return c;
    };
    bool def = true, off = true;
    for (int v : members)
        if (!(inside(v) + 1 >= int(adj[v].size()) - inside(v))) def = false;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (in[v]) continue;
        int ins = inside(v);
        if (ins == 0) continue; // not on the boundary
        if (!(ins >= int(adj[v].size()) - ins + 1)) off = false;
    }
    bool ok = true;
    switch (var.base) {
    case AllianceBase::defensive: ok = def; break;
    case AllianceBase::offensive: ok = off; break;
    case AllianceBase::powerful: ok = def && off; break;
    }
    if (ok && var.global) {
        for (int v = 1; v <= g.vertex_count() && ok; ++v)
            if (!in[v] && inside(v) == 0) ok = false;
    }
    if (ok && var.independent) {
        for (int v : members)
            if (inside(v) != 0) ok = false;
    }
    return ok;
}

// bipartite iff some of the 2^n sign assignments is a proper 2-coloring
inline bool bipartite_by_assignment(const Graph& g) {
    int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((mask >> (u - 1)) & 1) == ((mask >> (v - 1)) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return g.edge_count() == 0;
}

// chordal iff no vertex subset of size >= 4 induces a cycle
inline bool chordal_by_subsets(const Graph& g) {
    int n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> vs;
        for (int v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) vs.push_back(v);
        if (vs.size() < 4) continue;
        bool cycle = true;
        for (int v : vs) {
            int deg = 0;
            for (int u : vs)
                if (u != v && g.adjacent(u, v)) ++deg;
            if (deg != 2) {
                cycle = false;
                break;
            }
        }
        if (!cycle) continue;
        // degrees all 2: a disjoint union of cycles; connectivity makes it one
        std::vector<int> stack{vs[0]};
        std::vector<char> seen(n + 1, 0);
        seen[vs[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : vs)
                if (!seen[u] && g.adjacent(u, v)) {
                    seen[u] = 1;
                    ++reached;
                    stack.push_back(u);
                }
        }
        if (reached == int(vs.size())) return false;
    }
    return true;
}

} // namespace naive

// ---------------------------------------------------------------------------

namespace detail {

inline std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " E={";
    for (auto [u, v] : g.edges()) os << u << "-" << v << " ";
    os << "}";
    return os.str();
}

template <class F>
void for_each_subset(int n, F&& f) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) s.set(v);
        f(s);
    }
}

} // namespace detail

// PEO presence vs induced-cycle search, 2-coloring vs assignment search,
// same-type swaps as automorphisms, distance-closure vs components.
inline Failures check_recognizers(int exhaustive_n, int sampled_n, int samples,
                                  std::uint64_t seed) {
    Failures bad;
    auto probe = [&](const Graph& g) {
        bool peo = perfect_elimination_order(g).has_value();
        if (peo != naive::chordal_by_subsets(g))
            bad.push_back("peo mismatch on " + detail::describe(g));
        if (auto order = perfect_elimination_order(g)) {
            VertexSet prefix(g.vertex_count());
            for (int v : *order) {
                if (!g.is_simplicial(v, prefix) && !prefix.empty()) {
                    VertexSet pref2 = prefix;
                    pref2.set(v);
                    if (!g.is_simplicial(v, pref2))
                        bad.push_back("order not perfect elimination on " + detail::describe(g));
                }
                prefix.set(v);
            }
        }
        auto two = two_coloring(g);
        if (two.has_value() != naive::bipartite_by_assignment(g))
            bad.push_back("two_coloring mismatch on " + detail::describe(g));
        if (two) {
            if (!is_independent_set(g, two->first) || !is_independent_set(g, two->second))
                bad.push_back("two_coloring classes not independent on " + detail::describe(g));
        }
        NdPartition p = nd_partition(g);
        for (const auto& cls : p.classes)
            for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
                // swapping same-type u,v must map the edge set to itself
                int u = cls[i], v = cls[i + 1];
                auto mapv = [&](int x) { return x == u ? v : x == v ? u : x; };
                std::vector<std::pair<int, int>> mapped;
                for (auto [a, c] : g.edges()) {
                    int x = mapv(a), y = mapv(c);
                    mapped.emplace_back(std::min(x, y), std::max(x, y));
                }
                std::sort(mapped.begin(), mapped.end());
                if (mapped != g.edges())
                    bad.push_back("nd swap is not an automorphism on " + detail::describe(g));
            }
        for (int v = 1; v <= g.vertex_count(); ++v) {
            VertexSet seed_set(g.vertex_count());
            seed_set.set(v);
            VertexSet far = within_distance(g, seed_set, g.vertex_count());
            // must equal the connected component of v
            std::vector<int> stack{v};
            VertexSet comp(g.vertex_count());
            comp.set(v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                const VertexSet& nx = g.neighbors(x);
                for (int u = nx.first(); u != 0; u = nx.next(u))
                    if (!comp.test(u)) {
                        comp.set(u);
                        stack.push_back(u);
                    }
            }
            if (!(far == comp))
                bad.push_back("within_distance component mismatch on " + detail::describe(g));
        }
    };
    for (int n = 1; n <= exhaustive_n; ++n) for_each_labeled_graph(n, probe);
    for (int n = exhaustive_n + 1; n <= sampled_n; ++n)
        for (const Graph& g : sample_graphs(n, samples, seed)) probe(g);
    return bad;
}

// Predicates against the list-based re-evaluation, boundary/Z/Y basics,
// powerful as the conjunction, and the same-type exchange property.
inline Failures check_alliance_basics(int exhaustive_n, int sampled_n, int samples,
                                      std::uint64_t seed) {
    Failures bad;
    auto probe = [&](const Graph& g) {
        NdPartition p = nd_partition(g);
        detail::for_each_subset(g.vertex_count(), [&](const VertexSet& a) {
            if (boundary(g, a).intersects(a))
                bad.push_back("boundary intersects set on " + detail::describe(g));
            // Z is independent apart from isolated edges lying entirely inside
            // it (both endpoints are leaves with leaf neighborhoods)
            VertexSet z = z_set(g, a);
            for (int v = z.first(); v != 0; v = z.next(v))
                for (int u = z.next(v); u != 0; u = z.next(u))
                    if (g.adjacent(u, v) && !g.is_isolated_edge(u, v))
                        bad.push_back("z_set has a non-isolated internal edge on " +
                                      detail::describe(g));
            bool pow_direct = satisfies(g, a, {AllianceBase::powerful, false, false});
            if (pow_direct != (is_defensive(g, a) && is_offensive(g, a)))
                bad.push_back("powerful != defensive&offensive on " + detail::describe(g));
            for (const Variant& var : all_variants()) {
                if (satisfies(g, a, var) != naive::satisfies_recheck(g, a.to_vector(), var))
                    bad.push_back("predicate mismatch (" + var.to_string() + ") on " +
                                  detail::describe(g) + " A=" + a.to_string());
                if (!satisfies(g, a, var)) continue;
                // same-type exchange keeps every variant satisfied
                for (int v = a.first(); v != 0; v = a.next(v))
                    for (int u : p.classes[p.class_of[v]]) {
                        if (a.test(u)) continue;
                        VertexSet swapped = a;
                        swapped.reset(v);
                        swapped.set(u);
                        if (!satisfies(g, swapped, var))
                            bad.push_back("type exchange broke " + var.to_string() + " on " +
                                          detail::describe(g));
                    }
            }
        });
    };
    for (int n = 1; n <= exhaustive_n; ++n) for_each_labeled_graph(n, probe);
    for (int n = exhaustive_n + 1; n <= sampled_n; ++n)
        for (const Graph& g : sample_graphs(n, samples, seed)) probe(g);
    return bad;
}

// The incremental step checker must agree with the from-scratch predicates on
// every single move.
inline Failures check_step_checker(int max_n, std::uint64_t seed) {
    Failures bad;
    std::mt19937_64 rng(seed);
    for (int n = 2; n <= max_n; ++n) {
        for (const Graph& g : sample_graphs(n, 40, seed + n)) {
            for (const Variant& var : all_variants()) {
                StepChecker checker(g, var);
                for (int trial = 0; trial < 30; ++trial) {
                    VertexSet a(n);
                    for (int v = 1; v <= n; ++v)
                        if (rng() & 1) a.set(v);
                    if (!satisfies(g, a, var)) continue;
                    checker.rebase(a);
                    for (int v = 1; v <= n; ++v)
                        for (int u = 1; u <= n; ++u) {
                            if (v == u) continue;
                            if (a.test(v) && !a.test(u)) {
                                VertexSet b = a;
                                b.reset(v);
                                b.set(u);
                                if (checker.after_jump(v, u) != satisfies(g, b, var))
                                    bad.push_back("after_jump mismatch on " + detail::describe(g) +
                                                  " " + var.to_string() + " A=" + a.to_string());
                            }
                        }
                    for (int v = 1; v <= n; ++v) {
                        VertexSet b = a;
                        if (a.test(v)) {
                            b.reset(v);
                            if (checker.after_remove(v) != satisfies(g, b, var))
                                bad.push_back("after_remove mismatch on " + detail::describe(g) +
                                              " " + var.to_string() + " A=" + a.to_string());
                        } else {
                            b.set(v);
                            if (checker.after_add(v) != satisfies(g, b, var))
                                bad.push_back("after_add mismatch on " + detail::describe(g) + " " +
                                              var.to_string() + " A=" + a.to_string());
                        }
                    }
                }
            }
        }
    }
    return bad;
}

// ---------------------------------------------------------------------------
// Instance sweeps shared by solver-agreement checks.

struct SweepOptions {
    int max_k = 3;
    long max_bound = 4;
    int max_pairs = 24; // endpoint pairs sampled per (graph, variant, rule)
};

// Instances over one graph: every variant, rules ts/tj/tar (cap k and k+1),
// endpoint pairs of equal size <= max_k drawn deterministically.
template <class F>
void for_each_instance(const Graph& g, const SweepOptions& opt, F&& f) {
    for (const Variant& var : all_variants()) {
        auto configs = enumerate_configs(g, var, 0, std::min(opt.max_k, g.vertex_count()));
        for (MoveKind kind : {MoveKind::ts, MoveKind::tj, MoveKind::tar}) {
            std::vector<std::pair<int, int>> pairs;
            for (std::size_t i = 0; i < configs.size() && pairs.size() < 4096; ++i)
                for (std::size_t j = 0; j < configs.size(); ++j) {
                    if (kind != MoveKind::tar &&
                        configs[i].count() != configs[j].count())
                        continue;
                    if (configs[i].count() == 0 && configs[j].count() == 0) continue;
                    pairs.emplace_back(int(i), int(j));
                }
            if (pairs.empty()) continue;
            std::size_t stride = std::max<std::size_t>(1, pairs.size() / opt.max_pairs);
            for (std::size_t idx = 0; idx < pairs.size(); idx += stride) {
                auto [i, j] = pairs[idx];
                Instance inst;
                inst.graph = g;
                inst.start = configs[i];
                inst.target = configs[j];
                inst.variant = var;
                int k = std::max(configs[i].count(), configs[j].count());
                inst.rule = MoveRule{kind, kind == MoveKind::tar ? std::max(k, 1) : 0};
                f(inst);
                if (kind == MoveKind::tar) {
                    Instance wider = inst;
                    wider.rule.cap = k + 1;
                    f(wider);
                }
            }
        }
    }
}

inline std::string describe_instance(const Instance& inst) {
    std::ostringstream os;
    os << detail::describe(inst.graph) << " variant=" << inst.variant.to_string()
       << " rule=" << inst.rule.to_string();
    if (inst.rule.kind == MoveKind::tar) os << " cap=" << inst.rule.cap;
    os << " start=" << inst.start.to_string() << " target=" << inst.target.to_string();
    if (inst.move_bound) os << " bound=" << *inst.move_bound;
    return os.str();
}

inline std::string agree_or_fail(const Instance& inst, const Outcome& expect, const Outcome& got,
                                 const char* solver) {
    if (expect.reachable != got.reachable)
        return std::string(solver) + ": verdict mismatch on " + describe_instance(inst);
    if (expect.reachable && *expect.min_moves != *got.min_moves)
        return std::string(solver) + ": min-move mismatch (" + std::to_string(*expect.min_moves) +
               " vs " + std::to_string(*got.min_moves) + ") on " + describe_instance(inst);
    if (got.reachable) {
        if (!got.witness) return std::string(solver) + ": missing witness on " + describe_instance(inst);
        if (auto v = validate_sequence(inst, *got.witness))
            return std::string(solver) + ": witness violation (" + to_string(v->reason) +
                   " at " + std::to_string(v->index) + ") on " + describe_instance(inst);
    }
    return {};
}

// Oracle BFS distances against an explicitly materialized reconfiguration
// graph (enumerate_configs nodes + is_legal_step edges, plain BFS).
inline Failures check_oracle_optimality(const std::vector<Graph>& graphs, const SweepOptions& opt) {
    Failures bad;
    for (const Graph& g : graphs) {
        for_each_instance(g, opt, [&](Instance inst) {
            int lo = inst.rule.kind == MoveKind::tar ? 0 : inst.start.count();
            int hi = inst.rule.kind == MoveKind::tar ? inst.rule.cap : inst.start.count();
            auto nodes = enumerate_configs(inst.graph, inst.variant, lo, hi);
            std::vector<long> dist(nodes.size(), -1);
            std::size_t src = nodes.size();
            for (std::size_t i = 0; i < nodes.size(); ++i)
                if (nodes[i] == inst.start) src = i;
            if (src == nodes.size()) return;
            std::vector<std::size_t> queue{src};
            dist[src] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                std::size_t cur = queue[head];
                for (std::size_t j = 0; j < nodes.size(); ++j)
                    if (dist[j] < 0 && is_legal_step(inst.graph, nodes[cur], nodes[j], inst.rule)) {
                        dist[j] = dist[cur] + 1;
                        queue.push_back(j);
                    }
            }
            long expect = -1;
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (nodes[j] == inst.target) expect = dist[j];
            Outcome got = solve_exact(inst);
            if (got.reachable != (expect >= 0) ||
                (got.reachable && *got.min_moves != expect))
                bad.push_back("oracle vs explicit graph mismatch on " + describe_instance(inst));
        });
    }
    return bad;
}

// ---------------------------------------------------------------------------
// Monotonicity layer checks.

inline std::vector<Variant> rmi_variants() {
    return {
        {AllianceBase::defensive, false, false}, {AllianceBase::defensive, true, false},
        {AllianceBase::offensive, false, false}, {AllianceBase::offensive, true, false},
        {AllianceBase::powerful, false, false},  {AllianceBase::powerful, true, false},
    };
}

inline Failures check_rmi_family(int max_n) {
    Failures bad;
    for (int n = 1; n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (const Variant& var : rmi_variants())
                if (auto cex = check_rmi(g, var))
                    bad.push_back("rmi counterexample for " + var.to_string() + " on " +
                                  detail::describe(g) + " A=" + cex->from.to_string());
        });
    // the independent variant must yield a counterexample somewhere
    bool found = false;
    Graph pearl = Graph::build(3, {{1, 2}}); // isolated edge plus an isolate
    if (check_rmi(pearl, {AllianceBase::offensive, false, true})) found = true;
    for (int n = 2; n <= std::min(4, max_n) && !found; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!found && check_rmi(g, {AllianceBase::offensive, false, true})) found = true;
        });
    if (!found) bad.push_back("independent offensive unexpectedly monotone in the sweep");
    return bad;
}

// TJ within l moves iff TAR(k+1) within 2l moves, plus transform round trips.
inline Failures check_tar_tj_links(const std::vector<Graph>& graphs, const SweepOptions& opt) {
    Failures bad;
    for (const Graph& g : graphs) {
        for (const Variant& var : rmi_variants()) {
            auto configs = enumerate_configs(g, var, 1, std::min(opt.max_k, g.vertex_count()));
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t i = 0; i < configs.size(); ++i)
                for (std::size_t j = 0; j < configs.size(); ++j)
                    if (configs[i].count() == configs[j].count()) pairs.emplace_back(i, j);
            std::size_t stride = std::max<std::size_t>(1, pairs.size() / opt.max_pairs);
            for (std::size_t idx = 0; idx < pairs.size(); idx += stride) {
                {
                    auto [i, j] = pairs[idx];
                    int k = configs[i].count();
                    for (long ell = 0; ell <= opt.max_bound; ++ell) {
                        Instance tj{g, configs[i], configs[j], var, {MoveKind::tj, 0}, ell};
                        Instance tar{g, configs[i], configs[j], var, {MoveKind::tar, k + 1},
                                     2 * ell};
                        Outcome otj = solve_exact(tj);
                        Outcome otar = solve_exact(tar);
                        if (otj.reachable != otar.reachable) {
                            bad.push_back("tj/tar equivalence failed at ell=" +
                                          std::to_string(ell) + " on " + describe_instance(tj));
                            continue;
                        }
                        if (!otj.reachable) continue;
                        Sequence tarseq = tj_to_tar(g, var, *otj.witness);
                        if (tarseq.moves() != 2 * otj.witness->moves())
                            bad.push_back("tj_to_tar move count on " + describe_instance(tj));
                        if (auto viol = validate_sequence(tar, tarseq))
                            bad.push_back("tj_to_tar invalid output on " + describe_instance(tj));
                        Sequence back = tar_to_tj(g, var, k, tarseq);
                        Instance tjFree = tj;
                        tjFree.move_bound.reset();
                        if (auto viol = validate_sequence(tjFree, back))
                            bad.push_back("tar_to_tj invalid output on " + describe_instance(tj));
                        if (back.moves() > otj.witness->moves())
                            bad.push_back("tar_to_tj lengthened the witness on " +
                                          describe_instance(tj));
                    }
                }
            }
        }
    }
    return bad;
}

// Y(A)=Y(B) across every offensive single step; the frozen global
// independent offensive space.
inline Failures check_y_invariance(int max_n) {
    Failures bad;
    Variant oa{AllianceBase::offensive, false, false};
    for (int n = 1; n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            auto configs = enumerate_configs(g, oa, 0, n);
            for (const VertexSet& a : configs) {
                VertexSet ya = y_set(g, a);
                for (int v = 1; v <= n; ++v) {
                    VertexSet b = a;
                    if (a.test(v)) b.reset(v);
                    else b.set(v);
                    if (!satisfies(g, b, oa)) continue;
                    if (!(y_set(g, b) == ya))
                        bad.push_back("Y changed across a TAR step on " + detail::describe(g) +
                                      " A=" + a.to_string() + " v=" + std::to_string(v));
                }
                for (int v = a.first(); v != 0; v = a.next(v))
                    for (int u = 1; u <= n; ++u) {
                        if (a.test(u)) continue;
                        VertexSet b = a;
                        b.reset(v);
                        b.set(u);
                        if (!satisfies(g, b, oa)) continue;
                        if (!(y_set(g, b) == ya))
                            bad.push_back("Y changed across a TJ step on " + detail::describe(g));
                    }
            }
        });
    return bad;
}

inline Failures check_gidp_frozen(int max_n) {
    Failures bad;
    Variant gidp{AllianceBase::offensive, true, true};
    for (int n = 1; n <= max_n; ++n)
        for_each_labeled_graph(n, [&](const Graph& g) {
            for (const VertexSet& a : enumerate_configs(g, gidp, 0, n)) {
                try {
                    gidp_oa_frozen(g, a);
                } catch (const internal_error& e) {
                    bad.push_back(std::string("frozen check failed: ") + e.what() + " on " +
                                  detail::describe(g));
                }
            }
        });
    return bad;
}

// ---------------------------------------------------------------------------
// Specialized solver agreement. Every applicable solver must reproduce the
// oracle's verdict and minimum move count; branch instrumentation rides along.

struct BranchRecord {
    std::size_t max_da_pa = 0;
    std::size_t max_oa = 0;
    int k_da_pa = 0;
    int k_oa = 0;
    std::string worst_oa_instance;
};

inline Failures check_solver_agreement(const std::vector<Graph>& graphs, const SweepOptions& opt,
                                       BranchRecord* branches = nullptr) {
    Failures bad;
    auto note = [&](std::string msg) {
        if (!msg.empty()) bad.push_back(std::move(msg));
    };
    for (const Graph& g : graphs) {
        for_each_instance(g, opt, [&](Instance inst) {
            Outcome base = solve_exact(inst);

            // distinct Y-sets force unreachable for offensive-flavored kinds
            if (inst.variant.base != AllianceBase::defensive && base.reachable &&
                !(y_set(g, inst.start) == y_set(g, inst.target)))
                bad.push_back("reachable despite distinct Y sets on " + describe_instance(inst));

            if (inst.rule.kind == MoveKind::ts) {
                for (long ell = 0; ell <= opt.max_bound; ++ell) {
                    Instance bounded = inst;
                    bounded.move_bound = ell;
                    Outcome expect = solve_exact(bounded);
                    Outcome got = solve_ts_budgeted(bounded, ell);
                    note(agree_or_fail(bounded, expect, got, "ts-budgeted"));
                    if (branches) {
                        int k = inst.start.count();
                        if (inst.variant.base == AllianceBase::offensive) {
                            if (got.stats.max_branch > branches->max_oa ||
                                (got.stats.max_branch == branches->max_oa && branches->k_oa == 0)) {
                                branches->max_oa = got.stats.max_branch;
                                branches->k_oa = k;
                                branches->worst_oa_instance = describe_instance(bounded);
                            }
                            if (got.stats.max_branch > std::size_t(k) * std::size_t(k))
                                bad.push_back("ts branching above k^2 on " +
                                              describe_instance(bounded));
                        } else {
                            branches->max_da_pa = std::max(branches->max_da_pa, got.stats.max_branch);
                            branches->k_da_pa = std::max(branches->k_da_pa, k);
                            if (got.stats.max_branch > std::size_t(k) * std::size_t(k))
                                bad.push_back("ts branching above k^2 on " +
                                              describe_instance(bounded));
                        }
                    }
                }
            }

            Variant plain_def{AllianceBase::defensive, false, false};
            if (inst.variant == plain_def && inst.rule.kind == MoveKind::tar) {
                for (long ell = 0; ell <= opt.max_bound; ++ell) {
                    Instance bounded = inst;
                    bounded.move_bound = ell;
                    Outcome expect = solve_exact(bounded);
                    Outcome got = solve_da_tar_pruned(bounded, ell);
                    note(agree_or_fail(bounded, expect, got, "da-tar-pruned"));
                }
            }
            if (inst.variant == plain_def && inst.rule.kind == MoveKind::tj) {
                for (long ell = 0; ell <= opt.max_bound; ++ell) {
                    Instance bounded = inst;
                    bounded.move_bound = ell;
                    Outcome expect = solve_exact(bounded);
                    Outcome got = solve_da_tj_pruned(bounded, ell);
                    note(agree_or_fail(bounded, expect, got, "da-tj-pruned"));
                }
            }

            if (inst.variant.base == AllianceBase::powerful)
                note(agree_or_fail(inst, base, solve_pa_k(inst), "pa-k"));
            if (inst.variant.base == AllianceBase::offensive && inst.variant.global &&
                !inst.variant.independent)
                note(agree_or_fail(inst, base, solve_goa_k(inst), "goa-k"));
            if (inst.variant.base == AllianceBase::defensive && inst.variant.global)
                note(agree_or_fail(inst, base, solve_gda_k(inst), "gda-k"));

            if (inst.variant.independent && !inst.variant.global &&
                inst.rule.kind == MoveKind::ts)
                note(agree_or_fail(inst, base, solve_idp_oa_ts(inst), "idp-oa-ts"));
            if (inst.variant.independent && inst.variant.global)
                note(agree_or_fail(inst, base, solve_gidp_oa(inst), "g-idp-oa"));

            note(agree_or_fail(inst, base, solve_nd_k(inst), "nd-k"));
            for (long ell = 0; ell <= opt.max_bound; ++ell) {
                Instance bounded = inst;
                bounded.move_bound = ell;
                Outcome expect = solve_exact(bounded);
                Outcome got = solve_nd_ell(bounded, ell);
                note(agree_or_fail(bounded, expect, got, "nd-ell"));
            }
        });
    }
    return bad;
}

// Distance-restriction safety: confining the oracle to da_search_space never
// turns a reachable defensive TAR instance unreachable.
inline Failures check_da_ground_set(const std::vector<Graph>& graphs, const SweepOptions& opt) {
    Failures bad;
    Variant def{AllianceBase::defensive, false, false};
    for (const Graph& g : graphs) {
        auto configs = enumerate_configs(g, def, 1, std::min(opt.max_k, g.vertex_count()));
        for (std::size_t i = 0; i < configs.size(); ++i)
            for (std::size_t j = 0; j < configs.size(); ++j) {
                if (configs[i].count() != configs[j].count()) continue;
                int k = configs[i].count();
                for (long ell = 0; ell <= opt.max_bound; ++ell) {
                    Instance inst{g, configs[i], configs[j], def, {MoveKind::tar, k}, ell};
                    Outcome full = solve_exact(inst);
                    if (!full.reachable) continue;
                    Outcome pruned = solve_da_tar_pruned(inst, ell);
                    if (!pruned.reachable)
                        bad.push_back("ground-set restriction flipped yes to no on " +
                                      describe_instance(inst));
                }
            }
    }
    return bad;
}

// Easy-path agreement on larger graphs (the fast paths are linear, the oracle
// still copes at this size).
inline Failures check_easy_agreement(int max_n, std::uint64_t seed) {
    Failures bad;
    std::vector<Graph> graphs;
    for (auto& [name, g] : named_family(max_n)) graphs.push_back(g);
    for (int n = 5; n <= max_n; ++n)
        for (const Graph& g : sample_graphs(n, 30, seed + n)) graphs.push_back(g);
    for (const Graph& g : graphs) {
        for (bool global : {false, true}) {
            Variant var{AllianceBase::offensive, global, true};
            auto configs = enumerate_configs(g, var, 0, g.vertex_count());
            for (const VertexSet& a : configs)
                for (const VertexSet& b : configs) {
                    if (a.count() != b.count()) continue;
                    for (MoveKind kind : {MoveKind::ts, MoveKind::tj, MoveKind::tar}) {
                        if (!global && kind != MoveKind::ts) continue;
                        MoveRule rule{kind, kind == MoveKind::tar ? a.count() + 1 : 0};
                        Instance inst{g, a, b, var, rule, std::nullopt};
                        Outcome expect = solve_exact(inst);
                        std::uint64_t looks = 0;
                        Outcome got = global ? solve_gidp_oa(inst, &looks)
                                             : solve_idp_oa_ts(inst, &looks);
                        std::string msg = agree_or_fail(inst, expect, got,
                                                        global ? "g-idp-oa" : "idp-oa-ts");
                        if (!msg.empty()) bad.push_back(msg);
                        if (looks > 2 * std::uint64_t(g.vertex_count()) + 2)
                            bad.push_back("fast path inspected too many adjacency lists on " +
                                          describe_instance(inst));
                    }
                }
        }
    }
    return bad;
}

// Validated-mode encoder feasibility against bounded oracle runs; literal mode
// must stay byte-stable and within the variable budget (checked by encode).
inline Failures check_ilp_encoder(const std::vector<Graph>& graphs, int max_k, long max_ell) {
    Failures bad;
    for (const Graph& g : graphs) {
        for (const Variant& var : all_variants()) {
            auto configs = enumerate_configs(g, var, 0, std::min(max_k, g.vertex_count()));
            for (const VertexSet& a : configs)
                for (const VertexSet& b : configs) {
                    if (a.count() != b.count()) continue;
                    if (a.empty() && b.empty()) continue;
                    for (long ell = 1; ell <= max_ell; ++ell) {
                        Instance inst{g, a, b, var, {MoveKind::tj, 0}, std::nullopt};
                        IlpModel model = encode_ilp(inst, ell, IlpMode::validated);
                        bool feas = check_ilp_feasible_tiny(model);
                        Instance bounded = inst;
                        bounded.move_bound = ell - 1;
                        Outcome expect = solve_exact(bounded);
                        if (feas != expect.reachable)
                            bad.push_back("validated ilp feasibility mismatch at ell=" +
                                          std::to_string(ell) + " on " + describe_instance(inst));
                    }
                }
        }
    }
    return bad;
}

// Structural class, the defining claims, verdict equivalence and length
// preservation for every hardness construction.
inline std::vector<ReductionSpec> all_reductions() {
    return {{ReductionTarget::da_ts},      {ReductionTarget::oa_ts},
            {ReductionTarget::da_tj},      {ReductionTarget::oa_tj},
            {ReductionTarget::goa_tj_bip}, {ReductionTarget::goa_chordal},
            {ReductionTarget::idp_oa_tj},  {ReductionTarget::pa_tj},
            {ReductionTarget::gpa_tj}};
}

inline bool reduction_applicable(const ReductionSpec& spec, const Graph& g, int k) {
    bool isolates = !g.isolates().empty();
    switch (spec.target) {
    case ReductionTarget::da_ts:
    case ReductionTarget::da_tj:
    case ReductionTarget::goa_tj_bip:
    case ReductionTarget::pa_tj:
        return !isolates;
    case ReductionTarget::gpa_tj:
        return !isolates && k >= 1 && k <= g.vertex_count() - 2;
    default:
        return true;
    }
}

// A dominating set usable as the construction anchor for the given target;
// the global powerful gadget needs 1 <= k <= n-2.
inline std::optional<VertexSet> reduction_anchor(const ReductionSpec& spec, const Graph& g) {
    int n = g.vertex_count();
    if (spec.target != ReductionTarget::gpa_tj) {
        VertexSet all = g.vertices();
        if (!reduction_applicable(spec, g, all.count())) return std::nullopt;
        return all;
    }
    for (int k = 1; k <= n - 2; ++k) {
        std::optional<VertexSet> found;
        detail::for_each_subset(n, [&](const VertexSet& s) {
            if (!found && s.count() == k && is_dominating(g, s)) found = s;
        });
        if (found && reduction_applicable(spec, g, k)) return found;
    }
    return std::nullopt;
}

// "A_D is an alliance of the right kind iff D dominates", evaluated for every
// subset D. The global powerful claim is anchored at a fixed token count (its
// hub inequality counts k tokens), so there the sweep runs over the size-k
// slice.
inline Failures check_reduction_claims(const std::vector<Graph>& seeds) {
    Failures bad;
    for (const Graph& g : seeds) {
        for (const ReductionSpec& spec : all_reductions()) {
            auto anchor = reduction_anchor(spec, g);
            if (!anchor) continue;
            ReducedInstance red = reduce(spec, g, *anchor, *anchor);
            detail::for_each_subset(g.vertex_count(), [&](const VertexSet& d) {
                if (spec.target == ReductionTarget::gpa_tj && d.count() != anchor->count())
                    return;
                VertexSet ad(red.instance.graph.vertex_count());
                ad |= red.instance.start;
                for (int v = 1; v <= g.vertex_count(); ++v) {
                    if (d.test(v)) ad.set(red.token_layer[v]);
                    else ad.reset(red.token_layer[v]);
                }
                bool dom = is_dominating(g, d);
                bool sat = satisfies(red.instance.graph, ad, red.instance.variant);
                if (dom != sat)
                    bad.push_back(spec.to_string() + ": claim mismatch for D=" + d.to_string() +
                                  " on " + detail::describe(g));
            });
        }
    }
    return bad;
}

inline Failures check_reduction_structure(const std::vector<Graph>& seeds) {
    Failures bad;
    for (const Graph& g : seeds) {
        for (const ReductionSpec& spec : all_reductions()) {
            auto anchor = reduction_anchor(spec, g);
            if (!anchor) continue;
            ReducedInstance red = reduce(spec, g, *anchor, *anchor);
            if (spec.expects_chordal()) {
                if (!perfect_elimination_order(red.instance.graph))
                    bad.push_back(spec.to_string() + ": output not chordal on " +
                                  detail::describe(g));
            } else {
                if (!two_coloring(red.instance.graph))
                    bad.push_back(spec.to_string() + ": output not bipartite on " +
                                  detail::describe(g));
            }
        }
    }
    return bad;
}

inline Failures check_reduction_equivalence(const std::vector<Graph>& seeds, int max_k,
                                            int max_pairs) {
    Failures bad;
    for (const Graph& g : seeds) {
        auto doms = enumerate_configs(g, {AllianceBase::defensive, false, false}, 0, 0);
        (void)doms;
        std::vector<VertexSet> dsets;
        detail::for_each_subset(g.vertex_count(), [&](const VertexSet& s) {
            if (s.count() >= 1 && s.count() <= max_k && is_dominating(g, s)) dsets.push_back(s);
        });
        for (const ReductionSpec& spec : all_reductions()) {
            int pairs_used = 0;
            for (std::size_t i = 0; i < dsets.size() && pairs_used < max_pairs; ++i)
                for (std::size_t j = i; j < dsets.size() && pairs_used < max_pairs; ++j) {
                    if (dsets[i].count() != dsets[j].count()) continue;
                    int k = dsets[i].count();
                    if (!reduction_applicable(spec, g, k)) continue;
                    ++pairs_used;
                    ReducedInstance red = reduce(spec, g, dsets[i], dsets[j]);
                    Outcome seed_out = solve_ds_reconfig_tj(g, dsets[i], dsets[j]);
                    SearchLimits red_limits;
                    red_limits.state_budget = 2'000'000;
                    Outcome red_out = solve_exact(red.instance, red_limits);
                    if (seed_out.reachable != red_out.reachable) {
                        bad.push_back(spec.to_string() + ": verdict mismatch on " +
                                      detail::describe(g) + " D_s=" + dsets[i].to_string() +
                                      " D_t=" + dsets[j].to_string());
                        continue;
                    }
                    if (seed_out.reachable &&
                        *seed_out.min_moves != *red_out.min_moves)
                        bad.push_back(spec.to_string() + ": move count mismatch on " +
                                      detail::describe(g));
                    if (red_out.reachable) {
                        Sequence pulled = pull_back(red, g, *red_out.witness);
                        if (pulled.configs.front() != dsets[i] ||
                            pulled.configs.back() != dsets[j])
                            bad.push_back(spec.to_string() + ": pull_back endpoints on " +
                                          detail::describe(g));
                    }
                }
        }
    }
    return bad;
}

// ---------------------------------------------------------------------------

struct Options {
    int max_n = 5;
    std::uint64_t seed = 0x5eed5a1fULL;
};

// The full property sweep behind `selftest`; failures come back as messages.
inline Failures run_all(const Options& opt) {
    Failures all;
    auto merge = [&](Failures f) {
        for (auto& s : f) all.push_back(std::move(s));
    };
    int ex = std::min(opt.max_n, 5);
    std::vector<Graph> small;
    for (auto& [name, g] : named_family(std::min(opt.max_n + 1, 6))) small.push_back(g);
    for (const Graph& g : sample_graphs(5, 8, opt.seed)) small.push_back(g);

    merge(check_recognizers(std::min(ex, 4), opt.max_n + 2, 25, opt.seed));
    merge(check_alliance_basics(std::min(ex, 4), opt.max_n, 15, opt.seed));
    merge(check_step_checker(opt.max_n + 1, opt.seed));
    merge(check_oracle_optimality(small, {.max_k = 2, .max_bound = 3, .max_pairs = 6}));
    merge(check_rmi_family(std::min(ex, 4)));
    merge(check_tar_tj_links(small, {.max_k = 2, .max_bound = 3, .max_pairs = 8}));
    merge(check_y_invariance(std::min(ex, 4)));
    merge(check_gidp_frozen(std::min(ex, 4)));
    merge(check_solver_agreement(small, {.max_k = 3, .max_bound = 3, .max_pairs = 10}, nullptr));
    merge(check_da_ground_set(small, {.max_k = 2, .max_bound = 3, .max_pairs = 8}));
    merge(check_easy_agreement(opt.max_n + 2, opt.seed));
    {
        std::vector<Graph> tiny;
        for (auto& [name, g] : named_family(4)) tiny.push_back(g);
        merge(check_ilp_encoder(tiny, 2, 3));
        merge(check_reduction_claims(tiny));
        merge(check_reduction_structure(tiny));
        std::vector<Graph> seeds;
        for (auto& [name, g] : named_family(4))
            if (g.vertex_count() >= 3) seeds.push_back(g);
        merge(check_reduction_equivalence(seeds, 2, 3));
    }
    return all;
}

} // namespace alre::selftest

#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace alre {

// Simple undirected graph over vertices {1..n}. Immutable after build; safe to
// share across threads.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edge_list) {
        if (n < 0) throw malformed_input_error("graph: negative vertex count");
        Graph g;
        g.n_ = n;
        g.rows_.assign(n + 1, VertexSet(n));
        for (auto [u, v] : edge_list) {
            if (u < 1 || u > n || v < 1 || v > n)
                throw malformed_input_error("edge endpoint out of range: " + std::to_string(u) +
                                            " " + std::to_string(v));
            if (u == v)
                throw malformed_input_error("self-loop at vertex " + std::to_string(u));
            if (g.rows_[u].test(v)) continue; // duplicate edge, keep one
            g.rows_[u].set(v);
            g.rows_[v].set(u);
            g.edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        g.degree_.assign(n + 1, 0);
        for (int v = 1; v <= n; ++v) g.degree_[v] = g.rows_[v].count();
        std::sort(g.edges_.begin(), g.edges_.end());
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    int degree(int v) const { return degree_[v]; }
    bool adjacent(int u, int v) const { return rows_[u].test(v); }
    const VertexSet& neighbors(int v) const { return rows_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    VertexSet vertices() const {
        VertexSet s(n_);
        for (int v = 1; v <= n_; ++v) s.set(v);
        return s;
    }
    VertexSet open_neighborhood(const VertexSet& a) const {
        VertexSet s(n_);
        a.for_each([&](int v) { s |= rows_[v]; });
        return s;
    }
    VertexSet closed_neighborhood(const VertexSet& a) const {
        VertexSet s = open_neighborhood(a);
        s |= a;
        return s;
    }
    // Leaves are degree-1 vertices; isolates have degree 0.
    VertexSet leaves() const {
        VertexSet s(n_);
        for (int v = 1; v <= n_; ++v)
            if (degree_[v] == 1) s.set(v);
        return s;
    }
    VertexSet isolates() const {
        VertexSet s(n_);
        for (int v = 1; v <= n_; ++v)
            if (degree_[v] == 0) s.set(v);
        return s;
    }
    bool is_isolated_edge(int u, int v) const {
        return u != v && adjacent(u, v) && degree_[u] == 1 && degree_[v] == 1;
    }

    bool is_clique(const VertexSet& s) const {
        bool ok = true;
        s.for_each([&](int v) {
            VertexSet need = s;
            need.reset(v);
            if (!need.is_subset_of(rows_[v])) ok = false;
        });
        return ok;
    }
    bool is_simplicial(int v, const VertexSet& alive) const {
        VertexSet nb = rows_[v] & alive;
        return is_clique(nb);
    }

private:
    int n_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<int> degree_;
    std::vector<std::pair<int, int>> edges_;
};

// ---------------------------------------------------------------------------
// Structural recognizers.

// Valid 2-coloring (two independent sets covering V) iff the graph is bipartite.
inline std::optional<std::pair<VertexSet, VertexSet>> two_coloring(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n + 1, -1);
    std::queue<int> q;
    for (int s = 1; s <= n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u = g.neighbors(v).first(); u != 0; u = g.neighbors(v).next(u)) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a(n), b(n);
    for (int v = 1; v <= n; ++v) (color[v] == 0 ? a : b).set(v);
    return std::make_pair(a, b);
}

// Perfect elimination order v_1..v_n (each v_i simplicial in the prefix) iff
// chordal. Repeated simplicial elimination; simultaneously simplicial vertices
// are removed as a batch (they stay simplicial under each other's removal).
inline std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    int n = g.vertex_count();
    VertexSet alive = g.vertices();
    std::vector<int> removal;
    removal.reserve(n);
    int left = n;
    while (left > 0) {
        std::vector<int> batch;
        alive.for_each([&](int v) {
            if (g.is_simplicial(v, alive)) batch.push_back(v);
        });
        if (batch.empty()) return std::nullopt;
        for (int v : batch) {
            alive.reset(v);
            removal.push_back(v);
        }
        left -= int(batch.size());
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

// ---------------------------------------------------------------------------
// Neighborhood diversity.

struct NdPartition {
    std::vector<std::vector<int>> classes;       // sorted members
    std::vector<int> class_of;                   // vertex -> class index, [0] unused
    std::vector<bool> clique_flag;               // class induces a clique (singletons count)
    std::vector<bool> internal_edges;            // clique with >= 2 members
    std::vector<std::vector<bool>> class_adjacent; // diagonal mirrors internal_edges

    int count() const { return int(classes.size()); }
};

// Classes of the "same type" relation N(u)\{v} = N(v)\{u}; equivalently equal
// open or equal closed neighborhoods.
inline NdPartition nd_partition(const Graph& g) {
    int n = g.vertex_count();
    NdPartition p;
    p.class_of.assign(n + 1, -1);
    for (int v = 1; v <= n; ++v) {
        bool placed = false;
        for (std::size_t c = 0; c < p.classes.size() && !placed; ++c) {
            int rep = p.classes[c][0];
            VertexSet nv = g.neighbors(v);
            nv.reset(rep);
            VertexSet nr = g.neighbors(rep);
            nr.reset(v);
            if (nv == nr) {
                p.classes[c].push_back(v);
                p.class_of[v] = int(c);
                placed = true;
            }
        }
        if (!placed) {
            p.class_of[v] = int(p.classes.size());
            p.classes.push_back({v});
        }
    }
    int d = p.count();
    p.clique_flag.assign(d, false);
    p.internal_edges.assign(d, false);
    p.class_adjacent.assign(d, std::vector<bool>(d, false));
    for (int c = 0; c < d; ++c) {
        const auto& cls = p.classes[c];
        bool clique = cls.size() < 2 || g.adjacent(cls[0], cls[1]);
        p.clique_flag[c] = clique;
        p.internal_edges[c] = clique && cls.size() >= 2;
        p.class_adjacent[c][c] = p.internal_edges[c];
    }
    for (int c = 0; c < d; ++c)
        for (int e = c + 1; e < d; ++e) {
            bool adj = g.adjacent(p.classes[c][0], p.classes[e][0]);
            p.class_adjacent[c][e] = p.class_adjacent[e][c] = adj;
        }
    return p;
}

// ---------------------------------------------------------------------------
// Degree filter and bounded-distance closure.

struct InducedSubgraph {
    Graph graph;                  // vertices renamed 1..m
    std::vector<int> to_parent;   // [1..m] -> original id
    std::vector<int> from_parent; // original id -> new id, 0 when absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    int n = g.vertex_count();
    out.from_parent.assign(n + 1, 0);
    out.to_parent.assign(1, 0);
    keep.for_each([&](int v) {
        out.from_parent[v] = int(out.to_parent.size());
        out.to_parent.push_back(v);
    });
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (keep.test(u) && keep.test(v))
            edges.emplace_back(out.from_parent[u], out.from_parent[v]);
    out.graph = Graph::build(int(out.to_parent.size()) - 1, edges);
    return out;
}

// G[{v : d(v) <= r}]
inline InducedSubgraph low_degree_subgraph(const Graph& g, int r) {
    require_internal(r >= 0, "low_degree_subgraph: negative bound");
    VertexSet keep(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) <= r) keep.set(v);
    return induced_subgraph(g, keep);
}

// Vertices within BFS distance `bound` of the seed set.
inline VertexSet within_distance(const Graph& g, const VertexSet& seed, long bound) {
    if (seed.universe() != g.vertex_count())
        throw malformed_input_error("within_distance: seed universe mismatch");
    for (int v = seed.first(); v != 0; v = seed.next(v))
        if (v > g.vertex_count()) throw malformed_input_error("within_distance: seed vertex not in graph");
    VertexSet reached = seed;
    VertexSet frontier = seed;
    for (long step = 0; step < bound && !frontier.empty(); ++step) {
        VertexSet next = g.open_neighborhood(frontier);
        next.subtract(reached);
        if (next.empty()) break;
        reached |= next;
        frontier = next;
    }
    return reached;
}

} // namespace alre

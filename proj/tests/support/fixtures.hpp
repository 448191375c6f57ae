#pragma once

#include "alre/io.hpp"
#include "alre/selftest.hpp"

namespace fixtures {

using alre::Graph;
using alre::VertexSet;

inline Graph path(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    return Graph::build(n, es);
}
inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(n, 1);
    return Graph::build(n, es);
}
inline Graph clique(int n) {
    std::vector<std::pair<int, int>> es;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph::build(n, es);
}
inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int v = 2; v <= leaves + 1; ++v) es.emplace_back(1, v);
    return Graph::build(leaves + 1, es);
}
inline Graph edges(int n, std::vector<std::pair<int, int>> es) { return Graph::build(n, es); }

inline VertexSet vs(const Graph& g, std::initializer_list<int> members) {
    return alre::make_set(g.vertex_count(), members);
}

inline alre::Instance make_instance(const Graph& g, std::initializer_list<int> start,
                                    std::initializer_list<int> target, const char* variant,
                                    const char* rule, int cap = 0,
                                    std::optional<long> bound = std::nullopt) {
    alre::Instance inst;
    inst.graph = g;
    inst.start = vs(g, start);
    inst.target = vs(g, target);
    inst.variant = alre::Variant::parse(variant);
    inst.rule = alre::MoveRule::parse(rule);
    inst.rule.cap = cap;
    inst.move_bound = bound;
    inst.validate();
    return inst;
}

} // namespace fixtures

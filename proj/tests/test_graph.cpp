#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alre;
using fixtures::vs;

TEST_CASE("build_graph validates and deduplicates") {
    Graph p3 = Graph::build(3, {{1, 2}, {2, 3}});
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(1, 2));
    CHECK(p3.adjacent(2, 1));
    CHECK_FALSE(p3.adjacent(1, 3));

    Graph single = Graph::build(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.degree(1) == 0);

    Graph dedup = Graph::build(3, {{1, 2}, {1, 2}});
    CHECK(dedup.edge_count() == 1);
    CHECK(dedup.degree(3) == 0);

    CHECK_THROWS_AS(Graph::build(2, {{1, 3}}), malformed_input_error);
    CHECK_THROWS_AS(Graph::build(2, {{2, 2}}), malformed_input_error);
}

TEST_CASE("two_coloring") {
    auto p3 = two_coloring(fixtures::path(3));
    REQUIRE(p3.has_value());
    CHECK(p3->first == vs(fixtures::path(3), {1, 3}));
    CHECK(p3->second == vs(fixtures::path(3), {2}));

    CHECK_FALSE(two_coloring(fixtures::clique(3)).has_value());

    Graph empty2 = Graph::build(2, {});
    auto split = two_coloring(empty2);
    REQUIRE(split.has_value());
    CHECK(split->first.count() + split->second.count() == 2);
}

TEST_CASE("perfect elimination order") {
    Graph k3 = fixtures::clique(3);
    auto peo = perfect_elimination_order(k3);
    REQUIRE(peo.has_value());
    CHECK(peo->size() == 3);

    CHECK_FALSE(perfect_elimination_order(fixtures::cycle(4)).has_value());

    Graph p4 = fixtures::path(4);
    auto tree_order = perfect_elimination_order(p4);
    REQUIRE(tree_order.has_value());
    // every prefix ends in a simplicial vertex
    VertexSet prefix(4);
    for (int v : *tree_order) {
        prefix.set(v);
        CHECK(p4.is_simplicial(v, prefix));
    }
}

TEST_CASE("nd_partition") {
    NdPartition k3 = nd_partition(fixtures::clique(3));
    CHECK(k3.count() == 1);
    CHECK(k3.clique_flag[0]);
    CHECK(k3.internal_edges[0]);

    NdPartition p3 = nd_partition(fixtures::path(3));
    REQUIRE(p3.count() == 2);
    CHECK(p3.class_of[1] == p3.class_of[3]);
    CHECK(p3.class_of[1] != p3.class_of[2]);

    NdPartition st = nd_partition(fixtures::star(3));
    REQUIRE(st.count() == 2);
    CHECK(st.classes[st.class_of[2]].size() == 3); // the three leaves
    CHECK(st.classes[st.class_of[1]].size() == 1);
    CHECK_FALSE(st.internal_edges[st.class_of[2]]);
    CHECK(st.class_adjacent[st.class_of[1]][st.class_of[2]]);
}

TEST_CASE("low_degree_subgraph") {
    Graph st = fixtures::star(3);
    InducedSubgraph leaves_only = low_degree_subgraph(st, 1);
    CHECK(leaves_only.graph.vertex_count() == 3);
    CHECK(leaves_only.graph.edge_count() == 0); // center removed, leaves isolated
    CHECK(leaves_only.from_parent[1] == 0);

    Graph p4 = fixtures::path(4);
    InducedSubgraph full = low_degree_subgraph(p4, 4);
    CHECK(full.graph.vertex_count() == 4);
    CHECK(full.graph.edge_count() == 3);

    InducedSubgraph none = low_degree_subgraph(fixtures::clique(3), 1);
    CHECK(none.graph.vertex_count() == 0);
}

TEST_CASE("within_distance") {
    Graph p4 = fixtures::path(4);
    CHECK(within_distance(p4, vs(p4, {1}), 1) == vs(p4, {1, 2}));
    CHECK(within_distance(p4, vs(p4, {1}), 0) == vs(p4, {1}));
    CHECK(within_distance(p4, vs(p4, {1, 4}), 1) == vs(p4, {1, 2, 3, 4}));

    VertexSet rogue(5);
    rogue.set(5);
    CHECK_THROWS_AS(within_distance(p4, rogue, 1), malformed_input_error);
}

TEST_CASE("graph text format") {
    Graph g = parse_graph("# a comment\n graph: 3 \n edge: 1 2\nedge: 1 2\nedge: 2 3\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(parse_graph("graph: 2\nedge: 1 1\n"), malformed_input_error);
    CHECK_THROWS_AS(parse_graph("edge: 1 2\n"), malformed_input_error);
}

TEST_CASE("recognizer sweep against independent re-evaluation") {
    auto bad = selftest::check_recognizers(4, 6, 12, 99);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

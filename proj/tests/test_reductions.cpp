#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alre;
using fixtures::vs;

TEST_CASE("defensive sliding construction has the counted size and is chordal") {
    Graph k3 = fixtures::clique(3);
    ReducedInstance red = reduce({ReductionTarget::da_ts}, k3, vs(k3, {1}), vs(k3, {2}));
    // 3n vertices in the copy layers plus 6 gadget vertices per degree unit
    CHECK(red.instance.graph.vertex_count() == 3 * 3 + 6 * 2 * k3.edge_count());
    CHECK(red.instance.graph.vertex_count() == 45);
    CHECK(perfect_elimination_order(red.instance.graph).has_value());
    CHECK(red.instance.rule.kind == MoveKind::ts);
    CHECK(red.instance.variant == Variant::parse("def"));
}

TEST_CASE("defensive jumping construction is bipartite with the layered parts") {
    Graph p4 = fixtures::path(4);
    ReducedInstance red = reduce({ReductionTarget::da_tj}, p4, vs(p4, {2, 3}), vs(p4, {2, 4}));
    const Graph& gt = red.instance.graph;
    CHECK(two_coloring(gt).has_value());
    // the stated parts: V1,V3,V4,V6 against {a},V2,V5
    VertexSet left(gt.vertex_count()), right(gt.vertex_count());
    for (int v = 1; v <= gt.vertex_count(); ++v) {
        const std::string& name = red.names[v];
        if (name.rfind("v1:", 0) == 0 || name.rfind("v3:", 0) == 0 ||
            name.rfind("v4:", 0) == 0 || name.rfind("v6:", 0) == 0)
            left.set(v);
        else
            right.set(v);
    }
    CHECK(is_independent_set(gt, left));
    CHECK(is_independent_set(gt, right));
}

TEST_CASE("every construction satisfies its defining claim on tiny seeds") {
    std::vector<Graph> seeds = {fixtures::path(3), fixtures::clique(3), fixtures::path(4)};
    auto bad = selftest::check_reduction_claims(seeds);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("structural classes on small seeds") {
    std::vector<Graph> seeds = {fixtures::path(3), fixtures::clique(3), fixtures::star(3)};
    auto bad = selftest::check_reduction_structure(seeds);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("verdicts, lengths and pull-back round trips") {
    std::vector<Graph> seeds = {fixtures::path(3), fixtures::path(4)};
    auto bad = selftest::check_reduction_equivalence(seeds, 2, 3);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("pull_back projects a produced witness") {
    Graph p4 = fixtures::path(4);
    VertexSet ds = vs(p4, {2, 4});
    VertexSet dt = vs(p4, {2, 3});
    ReducedInstance red = reduce({ReductionTarget::da_tj}, p4, ds, dt);
    Outcome o = solve_exact(red.instance);
    REQUIRE(o.reachable);
    CHECK(*o.min_moves == 1);
    Sequence pulled = pull_back(red, p4, *o.witness);
    CHECK(pulled.configs.front() == ds);
    CHECK(pulled.configs.back() == dt);
    CHECK(pulled.moves() == 1);

    // zero-move witness projects to a zero-move sequence
    ReducedInstance same = reduce({ReductionTarget::da_tj}, p4, ds, ds);
    Outcome o0 = solve_exact(same.instance);
    REQUIRE(o0.reachable);
    CHECK(pull_back(same, p4, *o0.witness).moves() == 0);
}

TEST_CASE("unreachable seeds stay unreachable through every construction") {
    // C6 with two tokens: {1,4}, {2,5}, {3,6} are the only dominating pairs
    // and no jump connects any two of them
    Graph c6 = fixtures::cycle(6);
    VertexSet ds = vs(c6, {1, 4});
    VertexSet dt = vs(c6, {2, 5});
    Outcome seed = solve_ds_reconfig_tj(c6, ds, dt);
    REQUIRE_FALSE(seed.reachable);
    for (const ReductionSpec& spec : selftest::all_reductions()) {
        if (!selftest::reduction_applicable(spec, c6, 2)) continue;
        ReducedInstance red = reduce(spec, c6, ds, dt);
        INFO(spec.to_string());
        CHECK_FALSE(solve_exact(red.instance).reachable);
    }
}

TEST_CASE("timed seeds carry their bound into the reduced instance") {
    DsInstance seed;
    seed.graph = fixtures::path(4);
    seed.start = vs(seed.graph, {2, 4});
    seed.target = vs(seed.graph, {1, 3});
    seed.move_bound = 3; // parsed from `bound: 5`
    ReducedInstance red = reduce({ReductionTarget::oa_tj}, seed);
    REQUIRE(red.instance.move_bound.has_value());
    CHECK(*red.instance.move_bound == 3);
}

TEST_CASE("pushed-forward seed witnesses pull back to themselves") {
    Graph p4 = fixtures::path(4);
    VertexSet ds = vs(p4, {2, 4});
    VertexSet dt = vs(p4, {1, 3});
    Outcome seed = solve_ds_reconfig_tj(p4, ds, dt);
    REQUIRE(seed.reachable);
    for (const ReductionSpec& spec : selftest::all_reductions()) {
        if (!selftest::reduction_applicable(spec, p4, ds.count())) continue;
        ReducedInstance red = reduce(spec, p4, ds, dt);
        Sequence pushed;
        for (const VertexSet& d : seed.witness->configs) {
            VertexSet ad = red.instance.start;
            for (int v = 1; v <= 4; ++v) {
                if (d.test(v)) ad.set(red.token_layer[v]);
                else ad.reset(red.token_layer[v]);
            }
            pushed.configs.push_back(ad);
        }
        INFO(spec.to_string());
        CHECK_FALSE(validate_sequence(red.instance, pushed).has_value());
        Sequence pulled = pull_back(red, p4, pushed);
        REQUIRE(pulled.configs.size() == seed.witness->configs.size());
        for (std::size_t i = 0; i < pulled.configs.size(); ++i)
            CHECK(pulled.configs[i] == seed.witness->configs[i]);
        if (spec.target == ReductionTarget::gpa_tj)
            CHECK(red.instance.start.count() == 3 * 4 + 1); // 3n+1 tokens
    }
}

TEST_CASE("precondition violations are named") {
    Graph with_isolate = fixtures::edges(3, {{1, 2}});
    VertexSet d = vs(with_isolate, {1, 3});
    REQUIRE(is_dominating(with_isolate, d));
    CHECK_THROWS_AS(reduce({ReductionTarget::da_tj}, with_isolate, d, d), malformed_input_error);
    CHECK_THROWS_AS(reduce({ReductionTarget::da_ts}, with_isolate, d, d), malformed_input_error);

    Graph p3 = fixtures::path(3);
    CHECK_THROWS_AS(reduce({ReductionTarget::da_ts}, p3, vs(p3, {1}), vs(p3, {3})),
                    malformed_input_error); // {1} does not dominate P3

    // k = n-1 seeds are trivial for the global powerful construction
    Graph p4 = fixtures::path(4);
    CHECK_THROWS_AS(
        reduce({ReductionTarget::gpa_tj}, p4, vs(p4, {1, 2, 3}), vs(p4, {2, 3, 4})),
        malformed_input_error);
}

TEST_CASE("reduction target parsing") {
    CHECK(ReductionSpec::parse("g-oa-chordal").target == ReductionTarget::goa_chordal);
    CHECK(ReductionSpec::parse("pa-tj").to_string() == "pa-tj");
    CHECK_THROWS_AS(ReductionSpec::parse("nope"), malformed_input_error);
    CHECK(ReductionSpec{ReductionTarget::oa_ts}.expects_chordal());
    CHECK_FALSE(ReductionSpec{ReductionTarget::idp_oa_tj}.expects_chordal());
}

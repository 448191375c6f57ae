#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alre;
using fixtures::vs;

TEST_CASE("single step legality") {
    Graph p3 = fixtures::path(3);
    CHECK(is_legal_step(p3, vs(p3, {1}), vs(p3, {2}), MoveRule::parse("ts")));
    CHECK_FALSE(is_legal_step(p3, vs(p3, {1}), vs(p3, {3}), MoveRule::parse("ts")));
    CHECK(is_legal_step(p3, vs(p3, {1}), vs(p3, {3}), MoveRule::parse("tj")));
    MoveRule tar2{MoveKind::tar, 2};
    MoveRule tar1{MoveKind::tar, 1};
    CHECK(is_legal_step(p3, vs(p3, {1}), vs(p3, {1, 2}), tar2));
    CHECK_FALSE(is_legal_step(p3, vs(p3, {1}), vs(p3, {1, 2}), tar1));
    // no rule legalizes the empty step
    CHECK_FALSE(is_legal_step(p3, vs(p3, {1}), vs(p3, {1}), tar2));
}

TEST_CASE("sliding implies jumping") {
    for (auto& [name, g] : selftest::named_family(5)) {
        selftest::detail::for_each_subset(g.vertex_count(), [&](const VertexSet& a) {
            for (int v = a.first(); v != 0; v = a.next(v))
                for (int u = 1; u <= g.vertex_count(); ++u) {
                    if (a.test(u)) continue;
                    VertexSet b = a;
                    b.reset(v);
                    b.set(u);
                    if (is_legal_step(g, a, b, MoveRule::parse("ts")))
                        CHECK(is_legal_step(g, a, b, MoveRule::parse("tj")));
                }
        });
    }
}

TEST_CASE("validate_sequence") {
    Graph p3 = fixtures::path(3);
    Instance same = fixtures::make_instance(p3, {1}, {1}, "def", "tj");
    CHECK_FALSE(validate_sequence(same, Sequence{{vs(p3, {1})}}).has_value());

    Instance jump = fixtures::make_instance(p3, {1}, {3}, "def", "tj");
    CHECK_FALSE(validate_sequence(jump, Sequence{{vs(p3, {1}), vs(p3, {3})}}).has_value());

    Instance slide = fixtures::make_instance(p3, {1}, {3}, "def", "ts");
    auto viol = validate_sequence(slide, Sequence{{vs(p3, {1}), vs(p3, {2}), vs(p3, {3})}});
    REQUIRE(viol.has_value());
    CHECK(viol->index == 2);
    CHECK(viol->reason == ViolationReason::variant_fail); // {2} is not a defensive alliance

    auto wrong_end = validate_sequence(jump, Sequence{{vs(p3, {1})}});
    REQUIRE(wrong_end.has_value());
    CHECK(wrong_end->reason == ViolationReason::endpoint_mismatch);

    Instance bounded = fixtures::make_instance(p3, {1}, {3}, "def", "tj", 0, 0);
    auto over = validate_sequence(bounded, Sequence{{vs(p3, {1}), vs(p3, {3})}});
    REQUIRE(over.has_value());
    CHECK(over->reason == ViolationReason::bound_exceeded);

    // duplicate consecutive configurations are never a legal step
    auto dup = validate_sequence(jump, Sequence{{vs(p3, {1}), vs(p3, {1}), vs(p3, {3})}});
    REQUIRE(dup.has_value());
    CHECK(dup->reason == ViolationReason::step_illegal);
}

TEST_CASE("instance validation") {
    Graph p3 = fixtures::path(3);
    CHECK_THROWS_AS(fixtures::make_instance(p3, {2}, {2}, "def", "tj"), malformed_input_error);
    CHECK_THROWS_AS(fixtures::make_instance(p3, {1}, {1, 3}, "def", "tj"), malformed_input_error);
    CHECK_THROWS_AS(fixtures::make_instance(p3, {1, 3}, {1, 3}, "def", "tar", 1),
                    malformed_input_error);
}

TEST_CASE("instance file round trip and bound convention") {
    std::string text = "graph: 3\nedge: 1 2\nedge: 2 3\nvariant: def\nrule: tj\n"
                       "start: 1\ntarget: 3\nbound: 4\n";
    Instance inst = parse_instance(text);
    CHECK(inst.graph.vertex_count() == 3);
    REQUIRE(inst.move_bound.has_value());
    CHECK(*inst.move_bound == 2); // fewer than 4 configurations = at most 2 moves
    CHECK(parse_instance(format_instance(inst)).move_bound == inst.move_bound);

    CHECK_THROWS_AS(parse_instance("graph: 1\nvariant: def\nrule: tar\nstart: 1\ntarget: 1\n"),
                    malformed_input_error); // tar needs cap
    CHECK_THROWS_AS(
        parse_instance("graph: 1\nvariant: def\nrule: tj\ncap: 2\nstart: 1\ntarget: 1\n"),
        malformed_input_error); // cap without tar
}

TEST_CASE("sequence file round trip with empty configurations") {
    Sequence seq;
    seq.configs = {make_set(3, {1}), make_set(3, {}), make_set(3, {2})};
    std::string text = format_sequence(seq);
    Sequence back = parse_sequence(text, 3);
    REQUIRE(back.configs.size() == 3);
    CHECK(back.configs[1].empty());
    CHECK(back.configs[2] == seq.configs[2]);
}

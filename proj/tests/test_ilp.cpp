#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/lp_reader.hpp"

using namespace alre;
using fixtures::vs;

TEST_CASE("variable budget") {
    Graph p3 = fixtures::path(3); // two diversity classes
    Instance inst = fixtures::make_instance(p3, {1}, {3}, "def", "tj");
    IlpModel m = encode_ilp(inst, 3, IlpMode::literal);
    CHECK(m.vars.size() <= 2u * 2u * 6u); // (ell-1) * nd * (nd+4) = 24
    // the heaviest validated variant saturates the same budget
    Graph m2 = fixtures::edges(4, {{1, 2}, {3, 4}});
    Instance idp = fixtures::make_instance(m2, {1, 3}, {2, 4}, "off global independent", "tj");
    IlpModel mv = encode_ilp(idp, 3, IlpMode::validated);
    NdPartition p = nd_partition(m2);
    CHECK(mv.vars.size() <= 2u * std::size_t(p.count()) * std::size_t(p.count() + 4));
}

TEST_CASE("single-configuration models") {
    Graph p3 = fixtures::path(3);
    Instance same = fixtures::make_instance(p3, {1}, {1}, "def", "tj");
    IlpModel m = encode_ilp(same, 1, IlpMode::literal);
    CHECK(check_ilp_feasible_tiny(m));

    Instance differ = fixtures::make_instance(p3, {1}, {3}, "def", "tj");
    IlpModel m2 = encode_ilp(differ, 1, IlpMode::literal);
    CHECK_FALSE(check_ilp_feasible_tiny(m2));
}

TEST_CASE("validated mode matches the oracle where literal rows fail") {
    // K2 with one token: {1} is a valid defensive alliance, but the literal
    // defender row drops the member's self-count and rejects it
    Graph k2 = fixtures::edges(2, {{1, 2}});
    Instance inst = fixtures::make_instance(k2, {1}, {2}, "def", "tj");
    IlpModel lit = encode_ilp(inst, 2, IlpMode::literal);
    IlpModel val = encode_ilp(inst, 2, IlpMode::validated);
    CHECK_FALSE(check_ilp_feasible_tiny(lit));
    CHECK(check_ilp_feasible_tiny(val));
    CHECK_FALSE(val.notes.empty());
    Instance bounded = inst;
    bounded.move_bound = 1;
    CHECK(solve_exact(bounded).reachable);

    // K3 with two tokens: a valid offensive alliance the literal row's clique
    // surcharge rejects
    Graph k3 = fixtures::clique(3);
    Instance off = fixtures::make_instance(k3, {1, 2}, {2, 3}, "off", "tj");
    CHECK_FALSE(check_ilp_feasible_tiny(encode_ilp(off, 2, IlpMode::literal)));
    CHECK(check_ilp_feasible_tiny(encode_ilp(off, 2, IlpMode::validated)));

    // K1: dominating trivially, but the literal global row wants an occupied
    // neighbor class that does not exist
    Graph k1 = Graph::build(1, {});
    Instance glob = fixtures::make_instance(k1, {1}, {1}, "def global", "tj");
    CHECK_FALSE(check_ilp_feasible_tiny(encode_ilp(glob, 2, IlpMode::literal)));
    CHECK(check_ilp_feasible_tiny(encode_ilp(glob, 2, IlpMode::validated)));
}

TEST_CASE("check_ilp_feasible_tiny basics") {
    IlpModel m;
    int x = m.add_var("x", 0, 1);
    m.add_con({{x, 1}}, IlpCmp::ge, 2, "impossible");
    CHECK_FALSE(check_ilp_feasible_tiny(m));

    IlpModel empty;
    CHECK(check_ilp_feasible_tiny(empty));
}

TEST_CASE("validated feasibility equals bounded reachability") {
    std::vector<Graph> graphs;
    for (auto& [name, g] : selftest::named_family(4)) graphs.push_back(g);
    auto bad = selftest::check_ilp_encoder(graphs, 2, 3);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("lp export") {
    IlpModel empty;
    std::string text = export_lp(empty);
    CHECK(text == "Minimize\n obj: 0\nSubject To\nBounds\nGeneral\nEnd\n");

    IlpModel one;
    int x = one.add_var("x_1_1", 0, 3);
    one.add_con({{x, 2}}, IlpCmp::le, 5, "t");
    std::string snap = export_lp(one);
    CHECK(snap == "Minimize\n obj: 0\nSubject To\n c1: + 2 x_1_1 <= 5\nBounds\n 0 <= x_1_1 <= 3\n"
                  "General\n x_1_1\nEnd\n");
    CHECK(export_lp(one) == snap); // byte-stable

    Graph p3 = fixtures::path(3);
    Instance inst = fixtures::make_instance(p3, {1}, {3}, "def", "tj");
    IlpModel m = encode_ilp(inst, 3, IlpMode::validated);
    std::string lp = export_lp(m);
    lp_reader::Model back = lp_reader::parse(lp);
    CHECK(back.constraints.size() == m.cons.size());
    CHECK(back.integers.size() == m.vars.size());
    CHECK(back.bounds.size() == m.vars.size());
    // coefficients survive the round trip
    for (std::size_t i = 0; i < m.cons.size(); ++i) {
        REQUIRE(back.constraints[i].terms.size() == m.cons[i].terms.size());
        CHECK(back.constraints[i].rhs == m.cons[i].rhs);
        for (std::size_t t = 0; t < m.cons[i].terms.size(); ++t) {
            CHECK(back.constraints[i].terms[t].first == m.vars[m.cons[i].terms[t].first].name);
            CHECK(back.constraints[i].terms[t].second == m.cons[i].terms[t].second);
        }
    }
}

TEST_CASE("non-jump rules are a misuse") {
    Graph p3 = fixtures::path(3);
    Instance ts = fixtures::make_instance(p3, {1}, {3}, "def", "ts");
    CHECK_THROWS_AS(encode_ilp(ts, 2, IlpMode::literal), misuse_error);
}

#include <doctest.h>

#include "support/fixtures.hpp"

using namespace alre;
using fixtures::vs;

TEST_CASE("check_rmi finds no counterexample for the six plain/global variants") {
    for (auto& [name, g] : selftest::named_family(5)) {
        for (const Variant& var : selftest::rmi_variants()) {
            auto cex = check_rmi(g, var);
            if (cex)
                FAIL_CHECK("unexpected counterexample for " << var.to_string() << " on " << name);
        }
    }
}

TEST_CASE("independent offensive is not monotone") {
    // isolated edge plus an isolate: the jump 1 -> 2 is a slide whose union
    // {1,2} contains the edge
    Graph g = fixtures::edges(3, {{1, 2}});
    auto cex = check_rmi(g, Variant::parse("off independent"));
    REQUIRE(cex.has_value());
    VertexSet uni = cex->from;
    uni.set(cex->added);
    CHECK_FALSE(satisfies(g, uni, Variant::parse("off independent")));
}

TEST_CASE("tj_to_tar interleaves the union sets") {
    Graph p3 = fixtures::path(3);
    Sequence tj{{vs(p3, {1}), vs(p3, {3})}};
    Sequence tar = tj_to_tar(p3, Variant::parse("def"), tj);
    REQUIRE(tar.configs.size() == 3);
    CHECK(tar.configs[1] == vs(p3, {1, 3}));
    CHECK(tar.moves() == 2 * tj.moves());

    Sequence single{{vs(p3, {1})}};
    CHECK(tj_to_tar(p3, Variant::parse("def"), single).configs.size() == 1);

    CHECK_THROWS_AS(tj_to_tar(p3, Variant::parse("off independent"), tj), misuse_error);
}

TEST_CASE("tar_to_tj compresses back") {
    Graph p3 = fixtures::path(3);
    Sequence tar{{vs(p3, {1}), vs(p3, {1, 3}), vs(p3, {3})}};
    Sequence tj = tar_to_tj(p3, Variant::parse("def"), 1, tar);
    REQUIRE(tj.configs.size() == 2);
    CHECK(tj.configs[0] == vs(p3, {1}));
    CHECK(tj.configs[1] == vs(p3, {3}));

    Sequence single{{vs(p3, {1})}};
    CHECK(tar_to_tj(p3, Variant::parse("def"), 1, single).configs.size() == 1);
}

TEST_CASE("tar_to_tj lifts a dip below k") {
    // two disjoint edges; every subset here is defensive
    Graph m2 = fixtures::edges(4, {{1, 2}, {3, 4}});
    Variant def = Variant::parse("def");
    // dip to size 1: {1,3} -> {3} -> {2,3}  (k = 2)
    Sequence tar{{vs(m2, {1, 3}), vs(m2, {3}), vs(m2, {2, 3})}};
    Instance probe = fixtures::make_instance(m2, {1, 3}, {2, 3}, "def", "tar", 3);
    REQUIRE_FALSE(validate_sequence(probe, tar).has_value());
    Sequence tj = tar_to_tj(m2, def, 2, tar);
    Instance tj_probe = fixtures::make_instance(m2, {1, 3}, {2, 3}, "def", "tj");
    CHECK_FALSE(validate_sequence(tj_probe, tj).has_value());
    CHECK(tj.moves() <= 1);
}

TEST_CASE("round trip preserves endpoints and never lengthens") {
    auto graphs = selftest::named_family(5);
    std::vector<Graph> gs;
    for (auto& [name, g] : graphs) gs.push_back(g);
    auto bad = selftest::check_tar_tj_links(gs, {.max_k = 2, .max_bound = 3, .max_pairs = 6});
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

TEST_CASE("independent offensive bridge") {
    Graph m = fixtures::edges(2, {{1, 2}});
    Sequence tj{{vs(m, {1}), vs(m, {2})}};
    Sequence tar = idp_oa_tar_tj_bridge(m, tj, BridgeDirection::tj_to_tar);
    REQUIRE(tar.configs.size() == 3);
    CHECK(tar.configs[1].empty()); // vacate the edge before re-entering it

    Sequence back = idp_oa_tar_tj_bridge(m, tar, BridgeDirection::tar_to_tj);
    REQUIRE(back.configs.size() == 2);
    CHECK(back.configs[0] == vs(m, {1}));
    CHECK(back.configs[1] == vs(m, {2}));

    Sequence single{{vs(m, {1})}};
    CHECK(idp_oa_tar_tj_bridge(m, single, BridgeDirection::tar_to_tj).configs.size() == 1);
}

TEST_CASE("bridge round trip on two disjoint edges") {
    Graph m2 = fixtures::edges(4, {{1, 2}, {3, 4}});
    // slide on the first edge, then slide on the second
    Sequence tj{{vs(m2, {1, 3}), vs(m2, {2, 3}), vs(m2, {2, 4})}};
    Instance tj_probe = fixtures::make_instance(m2, {1, 3}, {2, 4}, "off independent", "tj");
    REQUIRE_FALSE(validate_sequence(tj_probe, tj).has_value());

    Sequence tar = idp_oa_tar_tj_bridge(m2, tj, BridgeDirection::tj_to_tar);
    Instance tar_probe = fixtures::make_instance(m2, {1, 3}, {2, 4}, "off independent", "tar", 3);
    CHECK_FALSE(validate_sequence(tar_probe, tar).has_value());
    CHECK(tar.moves() == 4);

    Sequence back = idp_oa_tar_tj_bridge(m2, tar, BridgeDirection::tar_to_tj);
    CHECK_FALSE(validate_sequence(tj_probe, back).has_value());
    CHECK(back.moves() <= tj.moves());
}

TEST_CASE("bridge accepts mixed sequences with nonadjacent jumps") {
    // two isolated edges plus two isolates; tokens can jump between components
    Graph g = fixtures::edges(6, {{1, 2}, {3, 4}});
    REQUIRE(satisfies(g, vs(g, {1, 5}), Variant::parse("off independent")));
    Sequence tj{{vs(g, {1, 5}), vs(g, {1, 6}), vs(g, {2, 6})}};
    Instance probe = fixtures::make_instance(g, {1, 5}, {2, 6}, "off independent", "tj");
    REQUIRE_FALSE(validate_sequence(probe, tj).has_value());
    Sequence tar = idp_oa_tar_tj_bridge(g, tj, BridgeDirection::tj_to_tar);
    Instance tar_probe = fixtures::make_instance(g, {1, 5}, {2, 6}, "off independent", "tar", 3);
    CHECK_FALSE(validate_sequence(tar_probe, tar).has_value());
    Sequence back = idp_oa_tar_tj_bridge(g, tar, BridgeDirection::tar_to_tj);
    CHECK_FALSE(validate_sequence(probe, back).has_value());
}

TEST_CASE("random walks normalize to valid jump sequences") {
    // non-minimal addition/removal walks with dips and revisits; the bridge
    // and the rmi compression must both survive them
    std::mt19937_64 rng(20250809);
    for (auto& [name, g] : selftest::named_family(6)) {
        for (const Variant& var : selftest::all_variants()) {
            if (var.global && var.independent) continue; // no step exists at all
            auto cfgs = enumerate_configs(g, var, 1, 3);
            if (cfgs.empty()) continue;
            StepChecker checker(g, var);
            for (int trial = 0; trial < 6; ++trial) {
                VertexSet start = cfgs[rng() % cfgs.size()];
                int k = start.count();
                Sequence walk{{start}};
                VertexSet cur = start;
                for (int step = 0; step < 16; ++step) {
                    checker.rebase(cur);
                    std::vector<VertexSet> nexts;
                    for (int v = 1; v <= g.vertex_count(); ++v) {
                        VertexSet b = cur;
                        if (cur.test(v)) {
                            if (!checker.after_remove(v)) continue;
                            b.reset(v);
                        } else {
                            if (cur.count() + 1 > k + 1 || !checker.after_add(v)) continue;
                            b.set(v);
                        }
                        nexts.push_back(b);
                    }
                    if (nexts.empty()) break;
                    cur = nexts[rng() % nexts.size()];
                    walk.configs.push_back(cur);
                }
                std::size_t last = 0;
                for (std::size_t i = 0; i < walk.configs.size(); ++i)
                    if (walk.configs[i].count() == k) last = i;
                if (last == 0) continue;
                walk.configs.resize(last + 1);
                VertexSet target = walk.configs.back();
                Sequence tj = var.independent
                                  ? idp_oa_tar_tj_bridge(g, walk, BridgeDirection::tar_to_tj)
                                  : tar_to_tj(g, var, k, walk);
                Instance tji{g, start, target, var, {MoveKind::tj, 0}, std::nullopt};
                auto viol = validate_sequence(tji, tj);
                if (viol)
                    FAIL_CHECK("invalid converted sequence (" << to_string(viol->reason) << ") on "
                                                              << name);
                CHECK(tj.moves() <= (walk.moves() + 1) / 2);
            }
        }
    }
}

TEST_CASE("global independent offensive space is frozen") {
    Graph st = fixtures::star(3);
    CHECK(gidp_oa_frozen(st, vs(st, {1})));
    Graph p2 = fixtures::edges(2, {{1, 2}});
    CHECK(gidp_oa_frozen(p2, vs(p2, {1})));
    Graph c4 = fixtures::cycle(4);
    CHECK(gidp_oa_frozen(c4, vs(c4, {1, 3})));
    CHECK_THROWS_AS(gidp_oa_frozen(p2, vs(p2, {})), misuse_error);
}

TEST_CASE("y invariance across offensive steps") {
    auto bad = selftest::check_y_invariance(4);
    for (const auto& msg : bad) FAIL_CHECK(msg);
    CHECK(bad.empty());
}

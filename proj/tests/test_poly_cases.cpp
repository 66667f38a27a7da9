#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dominion/named_graphs.hpp>
#include <dominion/poly_cases.hpp>

#include <random>

using namespace dominion;
using namespace dominion::poly;

namespace {
    /// Claw-free graphs: line graphs of sparse random graphs, with isolated vertices dropped.
    auto random_claw_free(int edges_in_root, std::mt19937_64 & rng) -> Graph
    {
        while (true) {
            auto root = random_graph(edges_in_root, 0.3, rng);
            if (root.edge_count() == 0 || root.edge_count() > 16)
                continue;
            return line_graph(root).graph;
        }
    }

    auto k3_2k1() { return disjoint_union(complete_graph(3), Graph(2, {})); }
}

TEST_CASE("bounded_gamma_solve")
{
    CHECK(oracle::gamma(cycle_graph(6)) == 2);
    auto c6 = bounded_gamma_solve(cycle_graph(6), 2);
    REQUIRE(c6);
    CHECK(c6->size == 2);
    CHECK(c6->witness.members() == std::vector<int>{0, 3});
    CHECK(bounded_gamma_solve(complete_graph(7), 1)->size == 1);
    CHECK(oracle::gamma(path_graph(8)) == 3);
    CHECK_FALSE(bounded_gamma_solve(path_graph(8), 2));
    CHECK_THROWS_AS(bounded_gamma_solve(path_graph(3), 0), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        auto g = random_graph(9, 0.3, rng);
        auto r = bounded_gamma_solve(g, 9);
        REQUIRE(r);
        CHECK(r->size == oracle::gamma(g));
        // ascending size then lexicographic: the lex-least optimum
        CHECK(r->witness.members() == oracle::all_minimum_sets(g).front());
    }
}

TEST_CASE("leaf_reduce examples")
{
    auto p4 = leaf_reduce(path_graph(4));
    CHECK(p4.forced.members() == std::vector<int>{1});
    CHECK(p4.reduced.size() == 1);
    CHECK(p4.origin == std::vector<int>{3});

    auto c5 = leaf_reduce(cycle_graph(5));
    CHECK(c5.forced.empty());
    CHECK(c5.reduced == cycle_graph(5));

    auto k2 = leaf_reduce(complete_graph(2));
    CHECK(k2.forced.count() == 1);
    CHECK(k2.reduced.size() == 0);

    CHECK_THROWS_AS(leaf_reduce(claw()), PreconditionFailed);
}

TEST_CASE("property: leaf reduction conserves gamma on claw-free graphs with pendant vertices")
{
    std::mt19937_64 rng(17);
    int checked = 0;
    while (checked < 200) {
        auto g = random_claw_free(7 + checked % 3, rng);
        bool has_leaf = false;
        for (int v = 0; v < g.size(); ++v)
            has_leaf = has_leaf || g.degree(v) == 1;
        if (! has_leaf || g.size() > 16)
            continue;
        auto lr = leaf_reduce(g);
        CHECK(lr.forced.any());
        CHECK(oracle::gamma(g) == oracle::gamma(lr.reduced) + lr.forced.count());
        ++checked;
    }
}

TEST_CASE("solve_path_or_cycle")
{
    CHECK(solve_path_or_cycle(path_graph(3)).witness.members() == std::vector<int>{1});
    CHECK(oracle::gamma(cycle_graph(9)) == 3);
    CHECK(solve_path_or_cycle(cycle_graph(9)).size == 3);
    CHECK(oracle::gamma(path_graph(7)) == 3);
    CHECK(solve_path_or_cycle(path_graph(7)).size == 3);
    CHECK_THROWS_AS(solve_path_or_cycle(claw()), PreconditionFailed);
    for (int n = 1; n <= 14; ++n) {
        auto p = solve_path_or_cycle(path_graph(n));
        CHECK(p.size == oracle::gamma(path_graph(n)));
        CHECK(mds::is_dominating(path_graph(n), p.witness));
        if (n >= 3) {
            auto c = solve_path_or_cycle(cycle_graph(n));
            CHECK(c.size == oracle::gamma(cycle_graph(n)));
            CHECK(mds::is_dominating(cycle_graph(n), c.witness));
        }
    }
    // vertex order along the path need not follow ids
    Graph shuffled(5, {{3, 0}, {0, 4}, {4, 1}, {1, 2}});
    auto r = solve_path_or_cycle(shuffled);
    CHECK(r.size == 2);
    CHECK(mds::is_dominating(shuffled, r.witness));
}

TEST_CASE("solve_claw_kk1")
{
    CHECK(oracle::alpha(cycle_graph(4)) == 2);
    CHECK(solve_claw_kk1(cycle_graph(4), 3).size == 2);
    CHECK(solve_claw_kk1(complete_graph(6), 2).size == 1);
    try {
        solve_claw_kk1(cycle_graph(7), 3);
        FAIL("expected a precondition failure");
    }
    catch (const PreconditionFailed & e) {
        REQUIRE(e.witness());
        CHECK(recognition::verify_embedding(cycle_graph(7), Graph(3, {}), *e.witness()));
    }
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 60) {
        auto g = random_graph(10, 0.6, rng);
        if (! recognition::is_claw_free(g))
            continue;
        int k = oracle::alpha(g) + 1;
        auto r = solve_claw_kk1(g, k);
        CHECK(r.size == oracle::gamma(g));
        CHECK(mds::is_independent(g, r.witness));
        ++checked;
    }
}

TEST_CASE("solve_claw_k3_2k1")
{
    CHECK(oracle::gamma(prism()) == 2);
    CHECK(solve_claw_k3_2k1(prism()).size == 2);
    CHECK(solve_claw_k3_2k1(complete_graph(5)).size == 1);
    CHECK(solve_claw_k3_2k1(cycle_graph(6)).size == 2);
    CHECK_THROWS_AS(solve_claw_k3_2k1(disjoint_union(complete_graph(3), complete_graph(3))), PreconditionFailed);
    CHECK_THROWS_AS(solve_claw_k3_2k1(claw()), PreconditionFailed);

    std::mt19937_64 rng(29);
    int checked = 0;
    for (int i = 0; i < 20000 && checked < 60; ++i) {
        auto g = random_graph(6 + i % 7, 0.55, rng);
        if (! is_connected(g) || ! recognition::is_claw_free(g) || recognition::contains_induced(g, k3_2k1()))
            continue;
        CHECK(solve_claw_k3_2k1(g).size == oracle::gamma(g));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("dispatch_solve examples")
{
    auto c9 = dispatch_solve(cycle_graph(9), net());
    CHECK(c9.result.size == 3);
    REQUIRE(c9.trace.steps.size() == 1);
    CHECK(c9.trace.steps[0].rule == Rule::path_or_cycle);

    auto p4 = dispatch_solve(path_graph(4));
    CHECK(p4.result.size == 2);
    CHECK(p4.trace.steps[0].rule == Rule::leaf_reduction);

    auto pet = dispatch_solve(petersen());
    CHECK(pet.result.size == 3);
    CHECK(pet.trace.steps.back().rule == Rule::exact_fallback);

    // (claw, net)-free input with a cited external algorithm: the fallback says so
    auto noted = dispatch_solve(complete_graph(4), net());
    CHECK(noted.trace.steps.back().evidence.find("external") != std::string::npos);

    auto split = dispatch_solve(disjoint_union(cycle_graph(5), complete_graph(4)), k3_2k1());
    CHECK(split.trace.steps[0].rule == Rule::component_split);
    CHECK(split.result.size == 3);
}

TEST_CASE("property: dispatch matches the exact solver and its trace replays")
{
    std::mt19937_64 rng(31);
    std::vector<std::optional<Graph>> hs{std::nullopt, net(), Graph(4, {}), k3_2k1(), path_graph(8)};
    for (int i = 0; i < 250; ++i) {
        Graph g = i % 2 ? random_claw_free(6 + i % 4, rng) : random_graph(8 + i % 8, 0.15 + 0.05 * (i % 8), rng);
        if (g.size() > 16)
            continue;
        const auto & h = hs[i % hs.size()];
        auto d = dispatch_solve(g, h);
        CHECK(d.result.size == oracle::gamma(g));
        CHECK(mds::is_dominating(g, d.result.witness));
        auto problem = replay_trace(g, d.trace);
        CHECK_MESSAGE(! problem, problem.value_or(""));
    }
}

TEST_CASE("the dominating-P8 rule")
{
    // a P8 with triangles over three of its edges: claw-free, no leaves, dominated by the path
    GraphBuilder b(11);
    for (int i = 0; i + 1 < 8; ++i)
        b.add_edge(i, i + 1);
    b.add_edge(8, 3);
    b.add_edge(8, 4);
    b.add_edge(9, 0);
    b.add_edge(9, 1);
    b.add_edge(10, 6);
    b.add_edge(10, 7);
    auto g = b.build();
    REQUIRE(recognition::is_claw_free(g));
    auto d = dispatch_solve(g);
    CHECK(d.result.size == oracle::gamma(g));
    CHECK_FALSE(replay_trace(g, d.trace));
    bool used = false;
    for (const auto & s : d.trace.steps)
        used = used || s.rule == Rule::bounded_gamma;
    CHECK(used);
}

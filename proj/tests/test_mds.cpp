#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <dominion/mds.hpp>
#include <dominion/named_graphs.hpp>
#include <dominion/recognition.hpp>

#include <random>

using namespace dominion;
using namespace dominion::mds;

namespace {
    auto set_of(const Graph & g, std::initializer_list<int> members) { return VertexSet(g.size(), members); }
}

TEST_CASE("is_dominating")
{
    CHECK(is_dominating(claw(), set_of(claw(), {0})));
    CHECK_FALSE(is_dominating(cycle_graph(4), set_of(cycle_graph(4), {0})));
    CHECK(is_dominating(path_graph(3), set_of(path_graph(3), {1})));
    // only the listed targets matter
    auto c4 = cycle_graph(4);
    CHECK(is_dominating(c4, set_of(c4, {0}), set_of(c4, {1, 3})));
}

TEST_CASE("min_dominating examples")
{
    CHECK(min_dominating(complete_graph(5)).size == 1);
    // frozen from the subset oracle
    CHECK(oracle::gamma(cycle_graph(4)) == 2);
    CHECK(min_dominating(cycle_graph(4)).size == 2);
    CHECK(oracle::gamma(path_graph(7)) == 3);
    CHECK(min_dominating(path_graph(7)).size == 3);
    CHECK(min_dominating(Graph(0, {})).size == 0);
    CHECK(min_dominating(Graph(3, {})).size == 3);
    CHECK(min_dominating(petersen()).size == 3);
}

TEST_CASE("witness is the lexicographically least optimum")
{
    std::mt19937_64 rng(77);
    for (int i = 0; i < 150; ++i) {
        auto g = random_graph(5 + i % 8, 0.15 + 0.05 * (i % 7), rng);
        auto r = min_dominating(g);
        auto all = oracle::all_minimum_sets(g);
        REQUIRE_FALSE(all.empty());
        CHECK(r.size == static_cast<int>(all.front().size()));
        CHECK(r.witness.members() == all.front());
    }
    // two components: per-component lex-least sets combine
    auto g = disjoint_union(cycle_graph(4), path_graph(3));
    CHECK(min_dominating(g).witness.members() == std::vector<int>{0, 1, 5});
}

TEST_CASE("property: oracle equivalence, additivity and witness validity")
{
    std::mt19937_64 rng(1);
    SolverOptions fast;
    fast.canonical_witness = false;
    for (int i = 0; i < 200; ++i) {
        int n = 9 + i % 8;
        auto g = random_graph(n, 0.1 + 0.03 * (i % 10), rng);
        auto r = min_dominating(g, fast);
        CHECK(r.size == oracle::gamma(g));
        CHECK(is_dominating(g, r.witness));
        CHECK(r.witness.count() == r.size);
    }
    for (int i = 0; i < 30; ++i) {
        auto a = random_graph(6, 0.3, rng);
        auto b = random_graph(7, 0.3, rng);
        CHECK(min_dominating(disjoint_union(a, b)).size == min_dominating(a).size + min_dominating(b).size);
    }
}

TEST_CASE("min_partial_dominating")
{
    auto c = claw();
    auto leaves = min_partial_dominating(c, {set_of(c, {1, 2, 3}), c.all_vertices(), std::nullopt});
    REQUIRE(leaves.status == PartialStatus::found);
    CHECK(leaves.result->size == 1);
    CHECK(leaves.result->witness.members() == std::vector<int>{0});

    auto c4 = cycle_graph(4);
    auto blocked = min_partial_dominating(c4, {c4.all_vertices(), set_of(c4, {0}), std::nullopt});
    CHECK(blocked.status == PartialStatus::infeasible);
    CHECK(blocked.uncoverable_target == 2);

    auto p5 = path_graph(5);
    CHECK(oracle::gamma(p5) == 2);
    auto tight = min_partial_dominating(p5, {p5.all_vertices(), p5.all_vertices(), 1});
    CHECK(tight.status == PartialStatus::over_budget);
    CHECK_FALSE(tight.result);
    auto enough = min_partial_dominating(p5, {p5.all_vertices(), p5.all_vertices(), 2});
    CHECK(enough.status == PartialStatus::found);
    CHECK(enough.result->size == 2);

    auto nothing = min_partial_dominating(p5, {p5.empty_set(), p5.all_vertices(), 0});
    CHECK(nothing.status == PartialStatus::found);
    CHECK(nothing.result->size == 0);
}

TEST_CASE("property: partial domination against the masked oracle")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1U << 10) - 1);
    for (int i = 0; i < 150; ++i) {
        auto g = random_graph(10, 0.25, rng);
        std::uint32_t targets = mask(rng), allowed = mask(rng) | mask(rng);
        VertexSet t(10), a(10);
        for (int v = 0; v < 10; ++v) {
            if ((targets >> v) & 1U)
                t.set(v);
            if ((allowed >> v) & 1U)
                a.set(v);
        }
        auto expected = oracle::partial_gamma(g, targets, allowed);
        auto got = min_partial_dominating(g, {t, a, std::nullopt});
        if (! expected)
            CHECK(got.status == PartialStatus::infeasible);
        else {
            REQUIRE(got.status == PartialStatus::found);
            CHECK(got.result->size == *expected);
            CHECK(is_dominating(g, got.result->witness, t));
            CHECK(got.result->witness.is_subset_of(a));
            if (*expected > 0) {
                auto below = min_partial_dominating(g, {t, a, *expected - 1});
                CHECK(below.status == PartialStatus::over_budget);
            }
        }
    }
    // with targets = allowed = V it is plain domination
    for (int i = 0; i < 30; ++i) {
        auto g = random_graph(11, 0.3, rng);
        auto all = g.all_vertices();
        CHECK(min_partial_dominating(g, {all, all, std::nullopt}).result->size == min_dominating(g).size);
    }
}

TEST_CASE("enumerate_min_dominating")
{
    auto c4 = enumerate_min_dominating(cycle_graph(4), 10);
    // brute force: every pair of C4 vertices dominates
    CHECK(oracle::all_minimum_sets(cycle_graph(4)).size() == 6);
    REQUIRE(c4.size() == 6);
    CHECK(c4.front().members() == std::vector<int>{0, 1});
    CHECK(c4.back().members() == std::vector<int>{2, 3});

    auto k3 = enumerate_min_dominating(complete_graph(3), 10);
    REQUIRE(k3.size() == 3);
    CHECK(k3[0].members() == std::vector<int>{0});
    CHECK(k3[2].members() == std::vector<int>{2});

    auto p3 = enumerate_min_dominating(path_graph(3), 2);
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].members() == std::vector<int>{1});

    std::mt19937_64 rng(21);
    for (int i = 0; i < 80; ++i) {
        auto g = random_graph(8 + i % 3, 0.3, rng);
        auto expected = oracle::all_minimum_sets(g);
        auto got = enumerate_min_dominating(g, 1000);
        REQUIRE(got.size() == expected.size());
        for (std::size_t j = 0; j < got.size(); ++j)
            CHECK(got[j].members() == expected[j]);
        auto truncated = enumerate_min_dominating(g, 2);
        CHECK(truncated.size() == std::min<std::size_t>(2, expected.size()));
    }
}

TEST_CASE("min_independent_dominating")
{
    CHECK(min_independent_dominating(claw()).size == 1);
    CHECK(oracle::independent_gamma(path_graph(4)) == 2);
    CHECK(min_independent_dominating(path_graph(4)).size == 2);

    std::mt19937_64 rng(4);
    int claw_free_seen = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = random_graph(6 + i % 7, 0.2 + 0.1 * (i % 7), rng);
        auto r = min_independent_dominating(g);
        int gamma = min_dominating(g).size;
        CHECK(r.size == oracle::independent_gamma(g));
        CHECK(is_dominating(g, r.witness));
        CHECK(is_independent(g, r.witness));
        CHECK(gamma <= r.size);
        CHECK(r.size <= oracle::alpha(g));
        if (recognition::is_claw_free(g)) {
            ++claw_free_seen;
            CHECK(r.size == gamma);
        }
    }
    CHECK(claw_free_seen > 10);
}

TEST_CASE("min_edge_dominating")
{
    auto p4 = min_edge_dominating(path_graph(4));
    CHECK(p4.size == 1);
    CHECK(p4.edges == std::vector<Edge>{{1, 2}});
    CHECK(oracle::edge_gamma(cycle_graph(5)) == 2);
    CHECK(min_edge_dominating(cycle_graph(5)).size == 2);
    CHECK(min_edge_dominating(complete_graph(3)).size == 1);
    CHECK_THROWS_AS(min_edge_dominating(Graph(3, {})), GraphError);
}

TEST_CASE("critical_vertices")
{
    CHECK(critical_vertices(claw()).members() == std::vector<int>{0});
    CHECK(critical_vertices(complete_graph(4)).empty());
    CHECK(critical_vertices(cycle_graph(4)).empty());
}

TEST_CASE("property: critical vertices lie in every minimum dominating set")
{
    std::mt19937_64 rng(31);
    int nonempty = 0;
    for (int i = 0; i < 120; ++i) {
        auto g = random_graph(5 + i % 5, 0.25, rng);
        auto critical = critical_vertices(g);
        for (int v = 0; v < g.size(); ++v) {
            bool expected = oracle::gamma(remove_vertex(g, v)) > oracle::gamma(g);
            CHECK(critical.test(v) == expected);
        }
        if (critical.any())
            ++nonempty;
        for (const auto & s : enumerate_min_dominating(g, 100000))
            CHECK(critical.is_subset_of(s));
    }
    CHECK(nonempty > 5);
}

TEST_CASE("node cap is a hard error")
{
    SolverOptions tiny;
    tiny.node_cap = 3;
    CHECK_THROWS_AS(min_dominating(petersen(), tiny), NodeCapExceeded);
}

TEST_CASE("parallel mode agrees on the optimum size")
{
    std::mt19937_64 rng(12);
    SolverOptions parallel;
    parallel.jobs = 3;
    for (int i = 0; i < 20; ++i) {
        auto g = random_regular(16, 3, rng);
        auto serial = min_dominating(g);
        auto split = min_dominating(g, parallel);
        CHECK(serial.size == split.size);
        CHECK(serial.witness == split.witness);
    }
}

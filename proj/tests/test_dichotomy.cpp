#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dominion/dichotomy.hpp>
#include <dominion/named_graphs.hpp>

using namespace dominion;
using namespace dominion::dichotomy;

namespace {
    auto verdict(const std::string & spec) { return classify(parse_graph_spec(spec)).verdict; }

    auto in_list(const Graph & g, const std::vector<Graph> & list) -> bool
    {
        for (const auto & h : list)
            if (recognition::isomorphic(g, h))
                return true;
        return false;
    }
}

TEST_CASE("classify examples")
{
    CHECK(verdict("diamond") == Verdict::np_complete);
    CHECK(verdict("bull") == Verdict::polynomial);
    CHECK(verdict("2xK:3") == Verdict::polynomial);
    auto c7 = classify(cycle_graph(7));
    CHECK(c7.verdict == Verdict::np_complete);
    CHECK(c7.witness->kernel == "C:7");
    CHECK(verdict("P:9") == Verdict::open);
    CHECK(verdict("3xK:3") == Verdict::open);
    CHECK(verdict("claw") == Verdict::np_complete);
    CHECK(verdict("P:8") == Verdict::polynomial);
    CHECK(verdict("9xK:1") == Verdict::polynomial);
    CHECK(classify(parse_graph_spec("9xK:1")).reason == "kK1");
    CHECK(classify(complete_graph(3)).reason == "cycle-only");
}

TEST_CASE("hardness_witness scans kernels in catalogue order")
{
    // gem: the first catalogue kernel that embeds is the diamond (gem has no induced C4)
    auto gem_hit = hardness_witness(gem());
    REQUIRE(gem_hit);
    CHECK(gem_hit->kernel == "diamond");
    CHECK(hardness_witness(house())->kernel == "C:4");
    CHECK_FALSE(hardness_witness(net()));
    auto dt = hardness_witness(double_triangle(3));
    REQUIRE(dt);
    CHECK(dt->kernel == "dt:3");
}

TEST_CASE("four-vertex table: exactly diamond, K4 and C4 are hard")
{
    auto rows = classify_all(4);
    std::vector<Graph> expected{diamond(), complete_graph(4), cycle_graph(4)};
    int hard = 0;
    for (const auto & row : rows) {
        bool np = row.classification.verdict == Verdict::np_complete;
        CHECK(np == in_list(row.graph, expected));
        hard += np;
        CHECK(row.classification.verdict != Verdict::open);
    }
    CHECK(hard == 3);
}

TEST_CASE("five-vertex table: exactly the claw-free members of the fifteen listed graphs are hard")
{
    auto co = [](const Graph & g) { return complement(g); };
    auto k1 = complete_graph(1);
    std::vector<Graph> expected{
        cycle_graph(5),
        complete_graph(5),
        complete_minus_edge(5),
        co(disjoint_union(path_graph(3), Graph(2, {}))),
        wheel4(),
        co(disjoint_union(claw(), k1)),
        co(disjoint_union(path_graph(2), path_graph(3))),
        gem(),
        co(disjoint_union(complete_graph(3), Graph(2, {}))),
        disjoint_union(complete_graph(4), k1),
        disjoint_union(cycle_graph(4), k1),
        dart(),
        house(),
        disjoint_union(diamond(), k1),
        butterfly(),
    };
    std::vector<Graph> claw_free_expected;
    for (const auto & g : expected) {
        CHECK(classify(g).verdict == Verdict::np_complete);
        if (recognition::is_claw_free(g))
            claw_free_expected.push_back(g);
    }
    // only the complement of K3+2K1 (that is K2 joined to 3K1) has a claw
    CHECK(claw_free_expected.size() == 14);
    auto rows = classify_all(5);
    int hard = 0;
    for (const auto & row : rows) {
        bool np = row.classification.verdict == Verdict::np_complete;
        CHECK_MESSAGE(np == in_list(row.graph, claw_free_expected), row.name);
        hard += np;
        CHECK(row.classification.verdict != Verdict::open);
    }
    CHECK(hard == 14);
}

TEST_CASE("three-vertex table is all polynomial")
{
    for (const auto & row : classify_all(3))
        CHECK(row.classification.verdict == Verdict::polynomial);
}

TEST_CASE("six vertices: the thirteen listed graphs are polynomial, C6 and the double triangle hard")
{
    for (auto spec : {"K:3+P:3", "tri:3,0,0", "tri:2,0,0+K:1", "2xK:3", "P:3+3xK:1", "2xK:2+2xK:1", "paw+2xK:1",
                      "bull+K:1", "K:3+K:2+K:1", "paw+K:2", "tri:2,1,0", "K:2+4xK:1", "K:3+3xK:1"}) {
        auto c = classify(parse_graph_spec(spec));
        CHECK_MESSAGE(c.verdict == Verdict::polynomial, spec);
    }
    CHECK(verdict("C:6") == Verdict::np_complete);
    CHECK(verdict("dt:0") == Verdict::np_complete);
    for (const auto & row : classify_all(6)) {
        CHECK(row.classification.verdict != Verdict::open);
        if (row.classification.verdict == Verdict::polynomial)
            CHECK_MESSAGE(reason_holds(row.graph, row.classification.reason), row.classification.reason);
    }
    CHECK_THROWS_AS(classify_all(7), std::invalid_argument);
}

TEST_CASE("every hard verdict carries a verifying embedding")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto & g : recognition::graph_classes(n))
            if (auto c = classify(g); c.verdict == Verdict::np_complete) {
                REQUIRE(c.witness);
                CHECK(recognition::verify_embedding(g, c.witness->kernel_graph, c.witness->embedding));
                CHECK_FALSE(c.citation.empty());
            }
}

TEST_CASE("property: containment closure on the small census")
{
    std::vector<Graph> all;
    for (int n = 3; n <= 6; ++n)
        for (auto & g : recognition::graph_classes(n, false, recognition::is_claw_free))
            all.push_back(std::move(g));
    std::vector<Verdict> v;
    for (const auto & g : all)
        v.push_back(classify(g).verdict);
    for (std::size_t a = 0; a < all.size(); ++a) {
        if (v[a] != Verdict::np_complete)
            continue;
        for (std::size_t b = 0; b < all.size(); ++b)
            if (all[b].size() > all[a].size() && recognition::contains_induced(all[b], all[a]))
                CHECK(v[b] != Verdict::polynomial);
    }
}

#include "matchbound/generators.hpp"

#include "matchbound/count.hpp"
#include "matchbound/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace matchbound;

TEST_CASE("splitmix64 golden outputs") {
    SplitMix64 rng(42);
    CHECK(rng.next() == 0xbdd732262feb6e95ULL);
    SplitMix64 rng2(42);
    // Exact: a 53-bit integer scaled by a power of two never rounds.
    CHECK(rng2.next_unit() == 0.7415648787718233);
    // The unit draw is (x >> 11) / 2^53, always in [0, 1).
    SplitMix64 rng3(0);
    for (int i = 0; i < 1000; ++i) {
        const double u = rng3.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("derive_seed golden outputs and independence") {
    const std::uint64_t expected[] = {0x910a2dec89025cc1ULL, 0xbeeb8da1658eec67ULL,
                                      0xf893a2eefb32555eULL, 0x71c18690ee42c90bULL,
                                      0x71bb54d8d101b5b9ULL};
    for (std::uint64_t k = 0; k < 5; ++k) CHECK(derive_seed(1, k) == expected[k]);
    // Index k hands out the (k+1)-th output of the plain stream, the
    // usual parent/child seeding arrangement.
    CHECK(derive_seed(1, 0) == SplitMix64(1).next());
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 1000; ++k) seen.insert(derive_seed(7, k));
    CHECK(seen.size() == 1000);
}

TEST_CASE("deterministic families") {
    const Graph k5 = complete_graph(5);
    CHECK(k5.vertex_count() == 5);
    CHECK(k5.edge_count() == 10);

    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.has_edge(0, 2));
    CHECK_FALSE(k23.has_edge(0, 1));

    const Graph blocks = bipartite_union({2, 3});
    CHECK(blocks.vertex_count() == 10);
    CHECK(blocks.edge_count() == 4 + 9);
    CHECK(blocks.has_edge(0, 2));     // inside K_{2,2}
    CHECK(blocks.has_edge(4, 7));     // inside K_{3,3}
    CHECK_FALSE(blocks.has_edge(0, 4));

    CHECK_THROWS_AS(bipartite_union({}), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_union({0}), std::invalid_argument);
    CHECK_THROWS_AS(complete_graph(-1), std::invalid_argument);
}

TEST_CASE("random graph golden edge set") {
    const Graph g = random_graph(8, 0.5, 42);
    CHECK(serialize_graph(g) ==
          "p 8\n"
          "e 0 2\ne 0 3\ne 0 4\ne 0 5\ne 0 7\n"
          "e 1 3\ne 1 5\ne 1 6\n"
          "e 2 5\ne 2 6\ne 2 7\n"
          "e 3 4\ne 3 7\n"
          "e 4 7\n"
          "e 5 6\n");
    // Same seed, same graph; different seed, different graph.
    CHECK(random_graph(8, 0.5, 42) == g);
    CHECK_FALSE(random_graph(8, 0.5, 43) == g);
    // Degenerate probabilities.
    CHECK(random_graph(6, 0.0, 1).edge_count() == 0);
    CHECK(random_graph(6, 1.0, 1).edge_count() == 15);
    CHECK_THROWS_AS(random_graph(6, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_graph(6, -0.1, 1), std::invalid_argument);
}

TEST_CASE("random bipartite golden edge set") {
    const Graph g = random_bipartite(5, 0.5, 7);
    CHECK(serialize_graph(g) ==
          "p 10\n"
          "e 0 5\ne 0 6\ne 0 9\n"
          "e 1 5\ne 1 6\ne 1 7\ne 1 8\ne 1 9\n"
          "e 2 5\n"
          "e 3 7\n"
          "e 4 6\ne 4 7\ne 4 8\n");
    // Edges only run between the two sides.
    const auto parts = bipartition(random_bipartite(6, 0.9, 3));
    REQUIRE(parts.has_value());
    CHECK(random_bipartite(4, 1.0, 9).edge_count() == 16);
}

TEST_CASE("campaign graphs are reproducible and indexed") {
    CampaignSpec spec;
    spec.family = Family::erdos_renyi;
    spec.n = 8;
    spec.p = 0.5;
    spec.seed = 42;
    spec.samples = 3;
    const Graph first = campaign_graph(spec, 0);
    CHECK(first == random_graph(8, 0.5, derive_seed(42, 0)));
    CHECK_FALSE(campaign_graph(spec, 1) == first);
    CHECK(campaign_graph(spec, 0) == first);
    CHECK_THROWS_AS(campaign_graph(spec, 3), std::invalid_argument);
    CHECK_THROWS_AS(campaign_graph(spec, -1), std::invalid_argument);

    CHECK(campaign_graph_id(spec, 1) == "erdos_renyi:n=8,p=0.5,seed=42,sample=1");
    CampaignSpec blocks;
    blocks.family = Family::bipartite_union;
    blocks.block_sizes = {2, 3};
    CHECK(campaign_graph_id(blocks, 0) == "bipartite_union:rs=2+3");
    CampaignSpec k4;
    k4.family = Family::complete;
    k4.n = 4;
    CHECK(campaign_graph_id(k4, 0) == "complete:n=4");
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::complete, Family::complete_bipartite, Family::bipartite_union,
                     Family::erdos_renyi, Family::random_bipartite}) {
        const auto parsed = family_from_name(family_name(f));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == f);
    }
    CHECK_FALSE(family_from_name("picket_fence").has_value());
    CHECK(family_is_random(Family::erdos_renyi));
    CHECK(family_is_random(Family::random_bipartite));
    CHECK_FALSE(family_is_random(Family::bipartite_union));
}

TEST_CASE("expected tight counts for block families") {
    CampaignSpec blocks;
    blocks.family = Family::bipartite_union;
    blocks.block_sizes = {2, 3, 3};
    const auto expected = expected_tight_count(blocks);
    REQUIRE(expected.has_value());
    CHECK(*expected == 2 * 6 * 6);

    CampaignSpec square;
    square.family = Family::complete_bipartite;
    square.a = square.b = 4;
    CHECK(expected_tight_count(square).value() == 24);

    CampaignSpec skew;
    skew.family = Family::complete_bipartite;
    skew.a = 2;
    skew.b = 3;
    CHECK_FALSE(expected_tight_count(skew).has_value());

    CampaignSpec er;
    er.family = Family::erdos_renyi;
    CHECK_FALSE(expected_tight_count(er).has_value());
}

TEST_CASE("campaign spec JSON round-trip") {
    CampaignSpec spec;
    spec.family = Family::random_bipartite;
    spec.n = 9;
    spec.p = 0.25;
    spec.seed = 0xdeadbeefcafef00dULL;
    spec.samples = 17;
    const nlohmann::json j = to_json(spec);
    CHECK(campaign_from_json(j) == spec);

    CampaignSpec blocks;
    blocks.family = Family::bipartite_union;
    blocks.block_sizes = {1, 5, 2};
    CHECK(campaign_from_json(to_json(blocks)) == blocks);

    nlohmann::json bad = to_json(blocks);
    bad["family"] = "unknown";
    CHECK_THROWS_AS(campaign_from_json(bad), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chibound/detect.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/graph.hpp"
#include "chibound/solve.hpp"
#include "chibound/witnesses.hpp"
#include "oracles.hpp"

using namespace chibound;

TEST_CASE("catalog containment sanity") {
    const Graph& chair = pattern(PatternId::Chair).graph;
    CHECK(contains_induced(chair, pattern(PatternId::P3unionK1).graph));
    CHECK(contains_induced(chair, pattern(PatternId::K2union2K1).graph));
    CHECK(contains_induced(chair, pattern(PatternId::K1_3).graph));
    CHECK(contains_induced(pattern(PatternId::Hvn).graph, pattern(PatternId::K4).graph));
    CHECK(contains_induced(pattern(PatternId::K5minusE).graph, pattern(PatternId::K4).graph));
}

TEST_CASE("find_induced examples") {
    auto e = find_induced(pattern(PatternId::Chair).graph, pattern(PatternId::P3unionK1));
    REQUIRE(e.has_value());
    CHECK(e->valid(pattern(PatternId::Chair).graph, pattern(PatternId::P3unionK1).graph));

    CHECK_FALSE(find_induced(cycle(5), pattern(PatternId::Chair)).has_value());
    CHECK(find_induced(grotzsch(), pattern(PatternId::Chair)).has_value());

    Graph c5c5 = join(cycle(5), cycle(5));
    CHECK(find_induced(c5c5, pattern(PatternId::Hvn)).has_value());
    CHECK(find_induced(c5c5, pattern(PatternId::K5minusE)).has_value());
}

TEST_CASE("is_free examples") {
    Graph c5c5 = join(cycle(5), cycle(5));
    CHECK(is_free(c5c5, {PatternId::P3unionK1, PatternId::K2union2K1}));
    CHECK(is_free(grotzsch(), {PatternId::P4plusK1, PatternId::Hvn, PatternId::K5minusE}));
    // complete hosts are free of anything with a non-edge
    for (const Pattern& p : pattern_catalog())
        if (p.graph.edge_count() < p.graph.order() * (p.graph.order() - 1) / 2)
            CHECK(is_free(complete(8), {p.id}));
}

TEST_CASE("detector agrees with subset-bijection brute force up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n).collect())
            for (const Pattern& p : pattern_catalog()) {
                auto brute = oracles::brute_find_induced(g, p.graph);
                auto fast = find_induced(g, p.graph);
                REQUIRE(fast.has_value() == brute.has_value());
                CHECK(contains_induced(g, p.graph) == brute.has_value());
                if (fast) {
                    CHECK(fast->valid(g, p.graph));
                    // deterministic: the lexicographically least embedding
                    std::vector<int> tuple(fast->map.begin(), fast->map.begin() + fast->size);
                    CHECK(tuple == *brute);
                }
            }
}

TEST_CASE("freeness is hereditary") {
    std::mt19937 rng(4242);
    std::vector<PatternId> sets[] = {{PatternId::Chair},
                                     {PatternId::K1_3, PatternId::K4},
                                     {PatternId::P3unionK1, PatternId::K2union2K1}};
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracles::random_graph(rng, 5 + trial % 4);
        for (const auto& pats : sets) {
            if (!is_free(g, std::span<const PatternId>(pats))) continue;
            std::uint32_t mask = rng() & g.vertex_mask();
            CHECK(is_free(induced(g, mask), std::span<const PatternId>(pats)));
        }
    }
}

TEST_CASE("substitution soundness up to 8 vertices") {
    // a graph without the claw has no chair; a graph without K4 has
    // neither HVN nor K5-e
    for (int n = 1; n <= 8; ++n)
        for (const Graph& g : all_graphs(n).collect()) {
            if (is_free(g, {PatternId::K1_3})) CHECK(is_free(g, {PatternId::Chair}));
            if (is_free(g, {PatternId::K4})) {
                CHECK(is_free(g, {PatternId::Hvn}));
                CHECK(is_free(g, {PatternId::K5minusE}));
            }
        }
}

#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "chibound/canonical.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "oracles.hpp"

using namespace chibound;

namespace {
constexpr std::uint64_t kClassCounts[] = {0,  1,   2,    4,     11,    34,
                                          156, 1044, 12346, 274668, 12005168};
}

TEST_CASE("generator counts match the frozen sequence up to 8") {
    for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n).collect().size() == kClassCounts[n]);
    CHECK_THROWS_AS(all_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs(11), std::invalid_argument);
}

TEST_CASE("generator matches the labeled dedup oracle up to 6") {
    for (int n = 1; n <= 6; ++n)
        CHECK(all_graphs(n).collect().size() == oracles::brute_all_graphs(n).size());
}

TEST_CASE("cycle-index count reproduces the class counts") {
    for (int n = 1; n <= 10; ++n) CHECK(oracles::cycle_index_graph_count(n) == kClassCounts[n]);
}

TEST_CASE("no two emitted graphs are isomorphic") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> forms;
        for (const Graph& g : all_graphs(n).collect()) {
            CHECK(g.order() == n);
            CHECK(forms.insert(canonical_form(g)).second);
        }
    }
}

TEST_CASE("emitted graphs are their own canonical representatives") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n).collect())
            CHECK(canonical_labeling(g).canonical == g);
}

TEST_CASE("every labeled graph maps to exactly one emitted class") {
    // brute isomorphism through 5, canonical matching at 6
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> classes = all_graphs(n).collect();
        std::set<std::string> forms;
        for (const Graph& g : classes) forms.insert(canonical_form(g));

        int bits = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
            Graph g(n);
            for (int i = 0; i < bits; ++i)
                if ((code >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
            if (n <= 5) {
                int hits = 0;
                for (const Graph& rep : classes)
                    if (oracles::brute_isomorphic(g, rep)) ++hits;
                CHECK(hits == 1);
            } else {
                CHECK(forms.count(canonical_form(g)) == 1);
            }
        }
    }
}

TEST_CASE("deterministic order across runs") {
    auto a = all_graphs(6).collect();
    auto b = all_graphs(6).collect();
    CHECK(a == b);
    auto c = all_graphs(6, 4).collect();  // worker count must not matter
    CHECK(a == c);
}

TEST_CASE("filter_free") {
    // on four vertices an induced pattern of order four is the whole
    // graph, so exactly one class is excluded
    auto free4 = filter_free(all_graphs(4), {PatternId::K2union2K1}).collect();
    CHECK(free4.size() == 10);
    std::size_t oracle = 0;
    for (const Graph& g : all_graphs(4).collect())
        if (!oracles::brute_contains_induced(g, pattern(PatternId::K2union2K1).graph)) ++oracle;
    CHECK(free4.size() == oracle);

    auto free5 = filter_free(all_graphs(5), {PatternId::Chair}).collect();
    for (const Graph& g : free5) CHECK_FALSE(is_isomorphic(g, pattern(PatternId::Chair).graph));
    std::size_t oracle5 = 0;
    for (const Graph& g : all_graphs(5).collect())
        if (!oracles::brute_contains_induced(g, pattern(PatternId::Chair).graph)) ++oracle5;
    CHECK(free5.size() == oracle5);

    CHECK(filter_free(all_graphs(5), {}).collect().size() == kClassCounts[5]);
}

TEST_CASE("streams round trip through graph6 files") {
    std::vector<Graph> graphs = all_graphs(6).collect();
    std::stringstream ss;
    write_graph6_lines(ss, graphs);
    std::vector<Graph> back = read_graph6_lines(ss);
    REQUIRE(back.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(back[i] == graphs[i]);
}

TEST_CASE("generated_upto chains levels in order") {
    auto graphs = GraphStream::generated_upto(5).collect();
    CHECK(graphs.size() == 1 + 2 + 4 + 11 + 34);
    int last = 0;
    for (const Graph& g : graphs) {
        CHECK(g.order() >= last);
        last = g.order();
    }
}

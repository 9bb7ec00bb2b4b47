#pragma once

// The forbidden-pattern catalog. Adjacency is fixed here once; the test
// suite pins the vertex/edge counts and the containment relations between
// catalog members (K1,3 inside chair, K4 inside HVN and K5-e, ...).

#include <array>
#include <string_view>

#include "chibound/graph.hpp"

namespace chibound {

enum class PatternId {
    Chair,       // K1,3 with one edge subdivided; equally P4 plus a pendant at a middle vertex
    P4plusK1,    // the join of P4 with K1 (the gem): a path of four under a dominating vertex
    Hvn,         // K4 plus a fifth vertex adjacent to exactly two of it
    K5minusE,    // complete on five minus one edge
    P3unionK1,   // path on three plus an isolated vertex
    K2union2K1,  // one edge plus two isolated vertices
    K1_3,        // the claw
    K4,
};

struct Pattern {
    PatternId id;
    const char* name;
    Graph graph;
};

inline const std::array<Pattern, 8>& pattern_catalog() {
    static const std::array<Pattern, 8> catalog = {{
        {PatternId::Chair, "chair", Graph::make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}})},
        {PatternId::P4plusK1, "p4k1",
         Graph::make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}})},
        {PatternId::Hvn, "hvn",
         Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}})},
        {PatternId::K5minusE, "k5e",
         Graph::make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}})},
        {PatternId::P3unionK1, "p3k1", Graph::make(4, {{0, 1}, {1, 2}})},
        {PatternId::K2union2K1, "k2u2k1", Graph::make(4, {{0, 1}})},
        {PatternId::K1_3, "k13", Graph::make(4, {{0, 1}, {0, 2}, {0, 3}})},
        {PatternId::K4, "k4", Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})},
    }};
    return catalog;
}

inline const Pattern& pattern(PatternId id) {
    for (const Pattern& p : pattern_catalog())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown pattern id");
}

inline const Pattern* pattern_by_name(std::string_view name) {
    for (const Pattern& p : pattern_catalog())
        if (name == p.name) return &p;
    return nullptr;
}

}  // namespace chibound

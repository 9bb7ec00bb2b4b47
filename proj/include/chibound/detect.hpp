#pragma once

// Induced-subgraph detection. An embedding maps pattern vertices to host
// vertices so that pattern edges AND pattern non-edges are preserved.
//
// Two search paths: find_induced returns the lexicographically least
// embedding (pattern vertices matched in index order, host candidates
// ascending), for reproducible reports; contains_induced only decides
// existence and is free to match pattern vertices in a
// connectivity-then-degree order, which prunes faster.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/patterns.hpp"

namespace chibound {

struct Embedding {
    int size = 0;                              // pattern order
    std::array<std::uint8_t, kMaxVertices> map{};  // pattern vertex -> host vertex

    bool valid(const Graph& host, const Graph& pattern) const {
        if (size != pattern.order()) return false;
        std::uint32_t used = 0;
        for (int p = 0; p < size; ++p) {
            if (map[p] >= host.order()) return false;
            if ((used >> map[p]) & 1u) return false;
            used |= 1u << map[p];
        }
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
        return true;
    }
};

namespace detail {

inline bool degree_compatible(const Graph& host, int v, const Graph& pat, int p) {
    if (host.degree(v) < pat.degree(p)) return false;
    return host.order() - 1 - host.degree(v) >= pat.order() - 1 - pat.degree(p);
}

inline bool extend_ordered(const Graph& host, const Graph& pat,
                           std::span<const int> order, int step,
                           std::array<std::uint8_t, kMaxVertices>& map,
                           std::uint32_t used) {
    if (step == pat.order()) return true;
    int p = order[step];
    for (int v = 0; v < host.order(); ++v) {
        if ((used >> v) & 1u) continue;
        if (!degree_compatible(host, v, pat, p)) continue;
        bool ok = true;
        for (int t = 0; t < step; ++t) {
            int q = order[t];
            if (pat.adjacent(p, q) != host.adjacent(v, map[q])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[p] = static_cast<std::uint8_t>(v);
        if (extend_ordered(host, pat, order, step + 1, map, used | (1u << v))) return true;
    }
    return false;
}

// connectivity-first matching order: start at a max-degree vertex, then
// repeatedly take the vertex with most already-placed neighbors
// (ties: higher degree, then lower index)
inline std::array<int, kMaxVertices> heuristic_order(const Graph& pat) {
    std::array<int, kMaxVertices> order{};
    int k = pat.order();
    std::uint32_t placed = 0;
    for (int step = 0; step < k; ++step) {
        int best = -1, bc = -1, bd = -1;
        for (int p = 0; p < k; ++p) {
            if ((placed >> p) & 1u) continue;
            int c = std::popcount(pat.neighbors(p) & placed);
            int d = pat.degree(p);
            if (c > bc || (c == bc && d > bd)) {
                best = p;
                bc = c;
                bd = d;
            }
        }
        order[step] = best;
        placed |= 1u << best;
    }
    return order;
}

}  // namespace detail

inline bool contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return false;
    auto order = detail::heuristic_order(pattern);
    std::array<std::uint8_t, kMaxVertices> map{};
    return detail::extend_ordered(host, pattern, std::span<const int>(order.data(), pattern.order()),
                                  0, map, 0);
}

// Lexicographically least induced embedding (in pattern-vertex order), or
// nullopt when none exists.
inline std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order()) return std::nullopt;
    std::array<int, kMaxVertices> identity{};
    for (int i = 0; i < pattern.order(); ++i) identity[i] = i;
    Embedding e;
    e.size = pattern.order();
    if (detail::extend_ordered(host, pattern,
                               std::span<const int>(identity.data(), pattern.order()), 0, e.map, 0))
        return e;
    return std::nullopt;
}

inline bool contains_induced(const Graph& host, const Pattern& p) {
    return contains_induced(host, p.graph);
}

inline std::optional<Embedding> find_induced(const Graph& host, const Pattern& p) {
    return find_induced(host, p.graph);
}

inline bool is_free(const Graph& host, std::span<const Pattern> patterns) {
    for (const Pattern& p : patterns)
        if (contains_induced(host, p.graph)) return false;
    return true;
}

inline bool is_free(const Graph& host, std::span<const PatternId> ids) {
    for (PatternId id : ids)
        if (contains_induced(host, pattern(id).graph)) return false;
    return true;
}

inline bool is_free(const Graph& host, std::initializer_list<PatternId> ids) {
    return is_free(host, std::span<const PatternId>(ids.begin(), ids.size()));
}

}  // namespace chibound

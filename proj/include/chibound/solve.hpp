#pragma once

// Exact invariants: clique number (Bron-Kerbosch with pivoting on
// bitmasks), k-colorability and chromatic number (branch and bound with
// DSATUR vertex selection and first-use color symmetry breaking), vertex
// criticality, and exhaustive enumeration of proper colorings up to color
// permutation.
//
// Solver routines keep their search state on the stack; call them from as
// many threads as you like on immutable graphs.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

// A proper coloring in canonical (first-use) labeling: scanning vertices
// 0..n-1, color c appears for the first time before color c+1 does.
struct Coloring {
    std::vector<int> colors;
    int color_count = 0;

    bool proper(const Graph& g) const {
        for (int u = 0; u < g.order(); ++u)
            for (std::uint32_t m = g.neighbors(u); m; m &= m - 1)
                if (colors[u] == colors[std::countr_zero(m)]) return false;
        return true;
    }

    bool canonical() const {
        int seen = 0;
        for (int c : colors) {
            if (c > seen) return false;
            if (c == seen) ++seen;
        }
        return seen == color_count;
    }

    bool operator==(const Coloring&) const = default;
};

namespace detail {

inline void bron_kerbosch(const Graph& g, std::uint32_t p, std::uint32_t x, int rsize, int& best) {
    if (p == 0 && x == 0) {
        best = std::max(best, rsize);
        return;
    }
    if (rsize + std::popcount(p) <= best) return;
    // pivot on the vertex covering most of P
    std::uint32_t px = p | x;
    int pivot = -1, cover = -1;
    for (std::uint32_t m = px; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int c = std::popcount(p & g.neighbors(v));
        if (c > cover) {
            cover = c;
            pivot = v;
        }
    }
    std::uint32_t cand = p & ~g.neighbors(pivot);
    for (std::uint32_t m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        bron_kerbosch(g, p & g.neighbors(v), x & g.neighbors(v), rsize + 1, best);
        p &= ~(1u << v);
        x |= 1u << v;
    }
}

struct ColorSearch {
    const Graph& g;
    int n, k;
    std::array<int, kMaxVertices> color;
    std::array<std::uint32_t, kMaxVertices> sat;  // colors present in the assigned neighborhood

    ColorSearch(const Graph& graph, int colors_allowed) : g(graph), n(graph.order()), k(colors_allowed) {
        color.fill(-1);
        sat.fill(0);
    }

    int select(int assigned) const {
        if (assigned == n) return -1;
        int best = -1, bs = -1, bd = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            int s = std::popcount(sat[v]);
            int d = g.degree(v);
            if (s > bs || (s == bs && d > bd)) {
                best = v;
                bs = s;
                bd = d;
            }
        }
        return best;
    }

    bool solve(int assigned, int used) {
        int v = select(assigned);
        if (v < 0) return true;
        int cap = std::min(k - 1, used);  // first fresh color only
        for (int c = 0; c <= cap; ++c) {
            if ((sat[v] >> c) & 1u) continue;
            color[v] = c;
            std::uint32_t touched = 0;
            for (std::uint32_t m = g.neighbors(v); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (color[w] < 0 && !((sat[w] >> c) & 1u)) {
                    sat[w] |= 1u << c;
                    touched |= 1u << w;
                }
            }
            if (solve(assigned + 1, std::max(used, c + 1))) return true;
            for (std::uint32_t m = touched; m; m &= m - 1) sat[std::countr_zero(m)] &= ~(1u << c);
            color[v] = -1;
        }
        return false;
    }
};

inline int greedy_dsatur_bound(const Graph& g) {
    ColorSearch s(g, g.order());
    int used = 0;
    for (int step = 0; step < g.order(); ++step) {
        int v = s.select(step);
        int c = std::countr_zero(~s.sat[v]);
        s.color[v] = c;
        used = std::max(used, c + 1);
        for (std::uint32_t m = g.neighbors(v); m; m &= m - 1) {
            int w = std::countr_zero(m);
            if (s.color[w] < 0) s.sat[w] |= 1u << c;
        }
    }
    return used;
}

}  // namespace detail

inline int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    detail::bron_kerbosch(g, g.vertex_mask(), 0, 0, best);
    return best;
}

// Canonical witness coloring with at most k colors, if one exists.
inline std::optional<Coloring> k_coloring(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_coloring: negative k");
    int n = g.order();
    if (n == 0) return Coloring{{}, 0};
    if (k == 0) return std::nullopt;
    detail::ColorSearch s(g, k);
    if (!s.solve(0, 0)) return std::nullopt;
    // relabel to first-use order over vertex indices
    Coloring out;
    out.colors.assign(n, -1);
    std::array<int, kMaxVertices> relabel{};
    relabel.fill(-1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (relabel[s.color[v]] < 0) relabel[s.color[v]] = next++;
        out.colors[v] = relabel[s.color[v]];
    }
    out.color_count = next;
    return out;
}

inline bool is_k_colorable(const Graph& g, int k) { return k_coloring(g, k).has_value(); }

inline int chromatic_number(const Graph& g) {
    int n = g.order();
    if (n == 0) return 0;
    int lo = std::max(1, clique_number(g));
    int hi = detail::greedy_dsatur_bound(g);
    for (int k = lo; k < hi; ++k)
        if (is_k_colorable(g, k)) return k;
    return hi;
}

// True iff removing any single vertex lowers the chromatic number.
inline bool is_vertex_critical(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("is_vertex_critical: empty graph");
    int chi = chromatic_number(g);
    for (int v = 0; v < g.order(); ++v) {
        Graph h = induced(g, g.vertex_mask() & ~(1u << v));
        if (chromatic_number(h) != chi - 1) return false;
    }
    return true;
}

// Yields every proper coloring with at most k colors exactly once up to
// color permutation (canonical first-use representatives), in
// lexicographic order of the color vector.
template <class F>
inline void for_each_coloring(const Graph& g, int k, F&& yield) {
    int n = g.order();
    std::vector<int> colors(n, -1);
    std::array<std::uint32_t, kMaxVertices> classes{};  // color -> vertex set
    auto rec = [&](auto&& self, int v, int used) -> void {
        if (v == n) {
            Coloring c{colors, used};
            yield(c);
            return;
        }
        int cap = std::min(k - 1, used);
        for (int c = 0; c <= cap; ++c) {
            if (g.neighbors(v) & classes[c]) continue;
            colors[v] = c;
            classes[c] |= 1u << v;
            self(self, v + 1, std::max(used, c + 1));
            classes[c] &= ~(1u << v);
            colors[v] = -1;
        }
    };
    if (n == 0) {
        Coloring c{{}, 0};
        yield(c);
        return;
    }
    if (k <= 0) return;
    rec(rec, 0, 0);
}

inline std::vector<Coloring> enumerate_colorings(const Graph& g, int k) {
    std::vector<Coloring> out;
    for_each_coloring(g, k, [&](const Coloring& c) { out.push_back(c); });
    return out;
}

}  // namespace chibound

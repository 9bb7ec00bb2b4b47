#pragma once

// Simple undirected graphs on up to 32 vertices, one adjacency bitmask per
// vertex. Graphs are cheap value types: construct, then treat as immutable
// and copy/share freely (all query methods are const and thread-safe).

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace chibound {

inline constexpr int kMaxVertices = 32;

namespace detail {
inline int checked_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order out of range [0," +
                                    std::to_string(kMaxVertices) + "]: " + std::to_string(n));
    return n;
}
}  // namespace detail

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(detail::checked_order(n)) {}

    static Graph make(int n, std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
        return make(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

    // Neighborhood of v as a bitmask over vertex indices.
    std::uint32_t neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return std::popcount(adj_[v]); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    // All vertices as a bitmask.
    std::uint32_t vertex_mask() const {
        return n_ == 32 ? ~0u : (1u << n_) - 1u;
    }

    void add_edge(int u, int v) {
        check_endpoint(u);
        check_endpoint(v);
        if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }

    void remove_edge(int u, int v) {
        check_endpoint(u);
        check_endpoint(v);
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
    }

    bool operator==(const Graph&) const = default;

private:
    void check_endpoint(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> adj_{};
};

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

// Disjoint union; vertices of h are shifted past those of g.
inline Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    Graph out(n);
    for (int u = 0; u < g.order(); ++u)
        for (std::uint32_t m = g.neighbors(u); m; m &= m - 1)
            if (int v = std::countr_zero(m); v > u) out.add_edge(u, v);
    for (int u = 0; u < h.order(); ++u)
        for (std::uint32_t m = h.neighbors(u); m; m &= m - 1)
            if (int v = std::countr_zero(m); v > u) out.add_edge(u + g.order(), v + g.order());
    return out;
}

// Join: disjoint union plus every cross edge.
inline Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

inline Graph complement(const Graph& g) {
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

// Subgraph induced by the vertex set `mask`; kept vertices are relabeled
// 0..k-1 preserving their relative order.
inline Graph induced(const Graph& g, std::uint32_t mask) {
    if (mask & ~g.vertex_mask())
        throw std::invalid_argument("induced: vertex set not within graph");
    std::array<int, kMaxVertices> newid{};
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1u) newid[v] = k++;
    Graph out(k);
    for (int u = 0; u < g.order(); ++u) {
        if (!((mask >> u) & 1u)) continue;
        for (std::uint32_t m = g.neighbors(u) & mask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (v > u) out.add_edge(newid[u], newid[v]);
        }
    }
    return out;
}

// Mycielski construction: original vertices 0..n-1, shadow vertices n..2n-1
// (shadow i+n sees the original neighborhood of i), apex 2n sees all shadows.
// Raises the chromatic number by one and preserves the clique number when
// the input has an edge.
inline Graph mycielski(const Graph& g) {
    int n = g.order();
    if (2 * n + 1 > kMaxVertices)
        throw std::invalid_argument("mycielski: result exceeds vertex cap");
    Graph out(2 * n + 1);
    for (int u = 0; u < n; ++u)
        for (std::uint32_t m = g.neighbors(u); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (v > u) out.add_edge(u, v);
            out.add_edge(n + u, v);
        }
    for (int u = 0; u < n; ++u) out.add_edge(2 * n, n + u);
    return out;
}

}  // namespace chibound

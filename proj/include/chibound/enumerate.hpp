#pragma once

// Isomorph-free exhaustive generation by canonical augmentation. Level n
// is produced from level n-1: every canonical representative is extended
// by one vertex over all 2^(n-1) neighborhood masks; a child survives iff
// it is new among this parent's children (local canonical dedup) and its
// canonical parent -- delete the vertex holding the last canonical
// position -- is this parent. Each isomorphism class is emitted exactly
// once, as its canonical representative, in a deterministic order.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "chibound/canonical.hpp"
#include "chibound/detect.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "chibound/parallel.hpp"

namespace chibound {

inline constexpr int kMaxGeneratedOrder = 10;

namespace detail {

// Packs order plus upper-triangle bits; unique for n <= 10.
inline std::uint64_t triangle_key(const Graph& g) {
    std::uint64_t key = static_cast<std::uint64_t>(g.order());
    int shift = 6;
    for (int col = 1; col < g.order(); ++col)
        for (int row = 0; row < col; ++row) {
            if (g.adjacent(row, col)) key |= std::uint64_t{1} << shift;
            ++shift;
        }
    return key;
}

// All children of one canonical parent at order n, in ascending mask order.
inline std::vector<Graph> children_of(const Graph& parent, int n) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    std::uint32_t top = n == 1 ? 1u : (1u << (n - 1));
    for (std::uint32_t mask = 0; mask < top; ++mask) {
        Graph child(n);
        for (int u = 0; u < n - 1; ++u)
            for (std::uint32_t m = parent.neighbors(u); m; m &= m - 1)
                if (int v = std::countr_zero(m); v > u) child.add_edge(u, v);
        for (std::uint32_t m = mask; m; m &= m - 1) child.add_edge(n - 1, std::countr_zero(m));

        CanonicalLabeling cl = canonical_labeling(child);
        if (!seen.insert(triangle_key(cl.canonical)).second) continue;

        // canonical parent check: drop the vertex at the last canonical slot
        int last = -1;
        for (int v = 0; v < n; ++v)
            if (cl.to_canonical[v] == n - 1) {
                last = v;
                break;
            }
        Graph sub = induced(child, child.vertex_mask() & ~(1u << last));
        if (canonical_labeling(sub).canonical == parent) out.push_back(cl.canonical);
    }
    return out;
}

inline std::vector<Graph> level(int n, int threads = 1) {
    if (n < 1 || n > kMaxGeneratedOrder)
        throw std::invalid_argument("graph generation supports 1 <= n <= " +
                                    std::to_string(kMaxGeneratedOrder));
    if (n == 1) return {Graph(1)};
    std::vector<Graph> parents = level(n - 1, threads);
    auto batches = parallel_map<std::vector<Graph>>(
        parents.size(), threads, [&](std::size_t i) { return children_of(parents[i], n); });
    std::vector<Graph> out;
    for (auto& b : batches) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace detail

// One representative per isomorphism class, pull-based. Sources: the
// internal generator (exactly n, or every order up to n) or a graph6 file.
class GraphStream {
public:
    static GraphStream generated(int n, int threads = 1) {
        if (n < 1 || n > kMaxGeneratedOrder)
            throw std::invalid_argument("graph generation supports 1 <= n <= " +
                                        std::to_string(kMaxGeneratedOrder));
        if (n == 1) {
            auto emitted = std::make_shared<bool>(false);
            return GraphStream(1, [emitted]() -> std::optional<Graph> {
                if (*emitted) return std::nullopt;
                *emitted = true;
                return Graph(1);
            });
        }
        auto state = std::make_shared<GenState>();
        state->n = n;
        state->parents = detail::level(n - 1, threads);
        return GraphStream(n, [state]() -> std::optional<Graph> {
            for (;;) {
                if (state->pos < state->batch.size()) return state->batch[state->pos++];
                if (state->parent_idx >= state->parents.size()) return std::nullopt;
                state->batch = detail::children_of(state->parents[state->parent_idx++], state->n);
                state->pos = 0;
            }
        });
    }

    static GraphStream generated_upto(int n_max, int threads = 1) {
        if (n_max < 1 || n_max > kMaxGeneratedOrder)
            throw std::invalid_argument("graph generation supports 1 <= n <= " +
                                        std::to_string(kMaxGeneratedOrder));
        auto state = std::make_shared<UptoState>();
        state->n_max = n_max;
        state->threads = threads;
        return GraphStream(0, [state]() -> std::optional<Graph> {
            for (;;) {
                if (state->inner) {
                    if (auto g = state->inner->next()) return g;
                    state->inner.reset();
                }
                if (state->n >= state->n_max) return std::nullopt;
                ++state->n;
                state->inner =
                    std::make_shared<GraphStream>(generated(state->n, state->threads));
            }
        });
    }

    static GraphStream from_file(const std::string& path) {
        auto in = std::make_shared<std::ifstream>(path);
        if (!*in) throw std::runtime_error("cannot open graph6 file: " + path);
        return GraphStream(0, [in]() { return next_line_graph(*in); });
    }

    static GraphStream from_stdin() {
        return GraphStream(0, [] { return next_line_graph(std::cin); });
    }

    static GraphStream of(std::vector<Graph> graphs) {
        auto state = std::make_shared<std::pair<std::vector<Graph>, std::size_t>>(
            std::move(graphs), 0);
        return GraphStream(0, [state]() -> std::optional<Graph> {
            if (state->second >= state->first.size()) return std::nullopt;
            return state->first[state->second++];
        });
    }

    // Passes exactly the graphs free of every listed pattern.
    static GraphStream filtered(GraphStream source, std::vector<PatternId> forbidden) {
        auto src = std::make_shared<GraphStream>(std::move(source));
        int n = src->order_hint();
        return GraphStream(n, [src, forbidden = std::move(forbidden)]() -> std::optional<Graph> {
            while (auto g = src->next())
                if (is_free(*g, std::span<const PatternId>(forbidden))) return g;
            return std::nullopt;
        });
    }

    std::optional<Graph> next() { return next_(); }

    std::vector<Graph> collect() {
        std::vector<Graph> out;
        while (auto g = next_()) out.push_back(*g);
        return out;
    }

    int order_hint() const { return n_; }  // 0 when mixed orders

private:
    struct GenState {
        int n = 0;
        std::vector<Graph> parents;
        std::size_t parent_idx = 0;
        std::vector<Graph> batch;
        std::size_t pos = 0;
    };
    struct UptoState {
        int n = 0, n_max = 0, threads = 1;
        std::shared_ptr<GraphStream> inner;
    };

    static std::optional<Graph> next_line_graph(std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            if (line.rfind(">>graph6<<", 0) == 0) {
                line.erase(0, 10);
                if (line.empty()) continue;
            }
            return from_graph6(line);
        }
        return std::nullopt;
    }

    GraphStream(int n, std::function<std::optional<Graph>()> next) : n_(n), next_(std::move(next)) {}

    int n_;
    std::function<std::optional<Graph>()> next_;
};

inline GraphStream all_graphs(int n, int threads = 1) { return GraphStream::generated(n, threads); }

inline GraphStream filter_free(GraphStream source, std::vector<PatternId> forbidden) {
    return GraphStream::filtered(std::move(source), std::move(forbidden));
}

}  // namespace chibound

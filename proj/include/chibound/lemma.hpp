#pragma once

// Structural check for vertex-critical chair-free graphs. For such a
// graph G with chromatic number chi, every (chi-1)-coloring of G-u leaves
// every color present in N(u) (otherwise u could take the missing color).
// Over all vertices u and all such colorings, select the contexts that
// maximize the number |R| of colors appearing exactly once in N(u) and,
// among those, lexicographically minimize the ascending vector of
// repeat-color multiplicities N_1 <= N_2 <= ...
//
// Two clauses are then checked on every optimal context:
//   A: every unique-color neighbor x in R has, inside N(u), a neighbor of
//      every repeat color.
//   B: every repeat-color neighbor (color index i in the ascending order)
//      has, inside N(u), a neighbor of every later repeat color k > i.
//
// Ordering::Sorted fixes the ascending order with ties broken by color
// index; Ordering::AllOrderings is the strict reading where clause B must
// hold under every tie-permutation, i.e. color a needs color b whenever
// N_b >= N_a (b != a).

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "chibound/canonical.hpp"
#include "chibound/detect.hpp"
#include "chibound/enumerate.hpp"
#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"
#include "chibound/parallel.hpp"
#include "chibound/patterns.hpp"
#include "chibound/solve.hpp"

namespace chibound {

enum class LemmaOrdering { Sorted, AllOrderings };

struct LemmaContext {
    int u = -1;
    std::vector<int> colors;        // on the full vertex set; colors[u] == -1
    std::uint32_t unique_set = 0;   // R: neighbors of u whose color is unique in N(u)
    std::vector<int> repeat_colors; // ascending by multiplicity, ties by color index
    std::vector<int> repeat_counts; // aligned with repeat_colors, each >= 2
};

struct LemmaViolation {
    char clause = '?';     // 'A' or 'B'
    int u = -1;
    int vertex = -1;       // the x in R (clause A) or the repeat-color vertex (clause B)
    int alpha_index = -1;  // index into repeat_colors of the missing color
    int alpha_color = -1;
    std::vector<int> colors;  // the coloring, for replay

    nlohmann::ordered_json to_json() const {
        return {{"clause", std::string(1, clause)},
                {"u", u},
                {"vertex", vertex},
                {"alpha_index", alpha_index},
                {"alpha_color", alpha_color},
                {"colors", colors}};
    }
};

struct LemmaSelection {
    int chi = 0;
    int best_unique = -1;          // |R| of the optimum
    std::vector<int> best_counts;  // ascending repeat multiplicities of the optimum
    std::vector<LemmaContext> contexts;  // all optima
};

namespace detail {

struct ContextScore {
    int unique = -1;
    std::vector<int> counts;

    // larger |R| wins; then lexicographically smaller count vector
    bool better_than(const ContextScore& o) const {
        if (unique != o.unique) return unique > o.unique;
        return counts < o.counts;
    }
    bool equals(const ContextScore& o) const { return unique == o.unique && counts == o.counts; }
};

}  // namespace detail

// Enumerates, over every vertex u and every canonical (chi-1)-coloring of
// G-u, the selection score, and returns all contexts attaining the
// optimum. Throws unless G is vertex-critical and chair-free.
inline LemmaSelection lemma_select(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("lemma_select: empty graph");
    if (contains_induced(g, pattern(PatternId::Chair).graph))
        throw std::invalid_argument("lemma_select: graph is not chair-free");
    if (!is_vertex_critical(g))
        throw std::invalid_argument("lemma_select: graph is not vertex-critical");

    int n = g.order();
    int chi = chromatic_number(g);
    LemmaSelection sel;
    sel.chi = chi;
    detail::ContextScore best;

    for (int u = 0; u < n; ++u) {
        std::uint32_t keep = g.vertex_mask() & ~(1u << u);
        Graph h = induced(g, keep);
        std::array<int, kMaxVertices> back{};  // h vertex -> g vertex
        int k = 0;
        for (int v = 0; v < n; ++v)
            if (v != u) back[k++] = v;

        for_each_coloring(h, chi - 1, [&](const Coloring& c) {
            std::array<int, kMaxVertices> count{};
            for (std::uint32_t m = g.neighbors(u); m; m &= m - 1) {
                int v = std::countr_zero(m);
                int hv = v < u ? v : v - 1;
                ++count[c.colors[hv]];
            }
            detail::ContextScore score;
            score.unique = 0;
            for (int col = 0; col < chi - 1; ++col) {
                if (count[col] == 1) ++score.unique;
                else if (count[col] >= 2) score.counts.push_back(count[col]);
                // a color absent from N(u) cannot happen for a
                // (chi-1)-coloring of G-u; tolerated here, rejected by the
                // coverage invariant below
            }
            std::sort(score.counts.begin(), score.counts.end());

            if (!sel.contexts.empty() && !score.better_than(best) && !score.equals(best)) return;

            LemmaContext ctx;
            ctx.u = u;
            ctx.colors.assign(n, -1);
            for (int i = 0; i < n - 1; ++i) ctx.colors[back[i]] = c.colors[i];
            for (std::uint32_t m = g.neighbors(u); m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (count[ctx.colors[v]] == 1) ctx.unique_set |= 1u << v;
            }
            // repeat colors ascending by multiplicity, ties by color index
            std::vector<std::pair<int, int>> reps;  // (count, color)
            for (int col = 0; col < chi - 1; ++col)
                if (count[col] >= 2) reps.push_back({count[col], col});
            std::sort(reps.begin(), reps.end());
            for (auto [cnt, col] : reps) {
                ctx.repeat_colors.push_back(col);
                ctx.repeat_counts.push_back(cnt);
            }

            if (sel.contexts.empty() || score.better_than(best)) {
                best = score;
                sel.contexts.clear();
            }
            sel.contexts.push_back(std::move(ctx));
        });
    }

    sel.best_unique = best.unique;
    sel.best_counts = best.counts;
    return sel;
}

// Clause A: every x in R has, within N(u), a neighbor of every repeat color.
inline std::vector<LemmaViolation> check_clause_a(const Graph& g, const LemmaContext& ctx) {
    std::vector<LemmaViolation> out;
    std::uint32_t nu = g.neighbors(ctx.u);
    for (std::uint32_t rm = ctx.unique_set; rm; rm &= rm - 1) {
        int x = std::countr_zero(rm);
        for (std::size_t i = 0; i < ctx.repeat_colors.size(); ++i) {
            int alpha = ctx.repeat_colors[i];
            bool found = false;
            for (std::uint32_t m = g.neighbors(x) & nu; m; m &= m - 1)
                if (ctx.colors[std::countr_zero(m)] == alpha) {
                    found = true;
                    break;
                }
            if (!found)
                out.push_back({'A', ctx.u, x, static_cast<int>(i), alpha, ctx.colors});
        }
    }
    return out;
}

// Clause B: a repeat-color vertex of color index i needs, within N(u), a
// neighbor of color index k for every later k (Sorted), or for every other
// repeat color with multiplicity >= its own (AllOrderings).
inline std::vector<LemmaViolation> check_clause_b(const Graph& g, const LemmaContext& ctx,
                                                  LemmaOrdering ordering = LemmaOrdering::Sorted) {
    std::vector<LemmaViolation> out;
    std::uint32_t nu = g.neighbors(ctx.u);
    std::array<int, kMaxVertices> rep_index{};
    rep_index.fill(-1);
    for (std::size_t i = 0; i < ctx.repeat_colors.size(); ++i)
        rep_index[ctx.repeat_colors[i]] = static_cast<int>(i);

    for (std::uint32_t m = nu & ~ctx.unique_set; m; m &= m - 1) {
        int y = std::countr_zero(m);
        int i = rep_index[ctx.colors[y]];
        if (i < 0) continue;
        for (std::size_t k = 0; k < ctx.repeat_colors.size(); ++k) {
            bool required = ordering == LemmaOrdering::Sorted
                                ? static_cast<int>(k) > i
                                : static_cast<int>(k) != i &&
                                      ctx.repeat_counts[k] >= ctx.repeat_counts[i];
            if (!required) continue;
            int alpha = ctx.repeat_colors[k];
            bool found = false;
            for (std::uint32_t nm = g.neighbors(y) & nu; nm; nm &= nm - 1)
                if (ctx.colors[std::countr_zero(nm)] == alpha) {
                    found = true;
                    break;
                }
            if (!found)
                out.push_back({'B', ctx.u, y, static_cast<int>(k), alpha, ctx.colors});
        }
    }
    return out;
}

// Every isomorphism class on <= n_max vertices that is vertex-critical and
// chair-free.
inline GraphStream critical_chair_free_stream(int n_max, int threads = 1) {
    if (n_max < 1 || n_max > 9)
        throw std::invalid_argument("critical_chair_free_stream supports 1 <= n_max <= 9");
    auto src = std::make_shared<GraphStream>(GraphStream::generated_upto(n_max, threads));
    std::vector<Graph> kept;
    while (auto g = src->next()) {
        if (!is_free(*g, {PatternId::Chair})) continue;
        if (!is_vertex_critical(*g)) continue;
        kept.push_back(*g);
    }
    return GraphStream::of(std::move(kept));
}

struct LemmaRecord {
    std::string graph6;
    int n = 0;
    int chi = 0;
    std::uint64_t context_count = 0;
    bool a_ok = true;
    bool b_ok = true;
    std::vector<LemmaViolation> violations;

    bool ok() const { return a_ok && b_ok; }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j = {{"graph6", graph6}, {"n", n},
                                    {"chi", chi},       {"contexts", context_count},
                                    {"clause_a", a_ok ? "ok" : "violated"},
                                    {"clause_b", b_ok ? "ok" : "violated"}};
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : violations) arr.push_back(v.to_json());
        j["violations"] = arr;
        return j;
    }
};

inline LemmaRecord check_lemma_on(const Graph& g,
                                  LemmaOrdering ordering = LemmaOrdering::Sorted) {
    LemmaRecord rec;
    rec.graph6 = to_graph6(g);
    rec.n = g.order();
    LemmaSelection sel = lemma_select(g);
    rec.chi = sel.chi;
    rec.context_count = sel.contexts.size();
    for (const LemmaContext& ctx : sel.contexts) {
        auto va = check_clause_a(g, ctx);
        auto vb = check_clause_b(g, ctx, ordering);
        if (!va.empty()) rec.a_ok = false;
        if (!vb.empty()) rec.b_ok = false;
        rec.violations.insert(rec.violations.end(), va.begin(), va.end());
        rec.violations.insert(rec.violations.end(), vb.begin(), vb.end());
    }
    return rec;
}

// Runs the clause checks on every vertex-critical chair-free graph on at
// most n_max vertices; records sorted by (order, canonical form).
inline std::vector<LemmaRecord> run_lemma_checks(int n_max,
                                                 LemmaOrdering ordering = LemmaOrdering::Sorted,
                                                 int threads = 1) {
    std::vector<Graph> graphs = critical_chair_free_stream(n_max, threads).collect();
    auto records = parallel_map<LemmaRecord>(graphs.size(), threads, [&](std::size_t i) {
        return check_lemma_on(graphs[i], ordering);
    });
    std::stable_sort(records.begin(), records.end(), [](const LemmaRecord& a, const LemmaRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.graph6 < b.graph6;
    });
    return records;
}

}  // namespace chibound

#pragma once

// Canonical labeling by individualization-refinement: equitable degree
// refinement, then backtracking over target-cell choices. The canonical
// form is the lexicographically least relabeled adjacency matrix over all
// leaves of the search tree. Automorphisms discovered at equal leaves
// prune sibling branches (orbit pruning), which keeps highly symmetric
// graphs polynomial in practice at this scale.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "chibound/graph.hpp"
#include "chibound/graph6.hpp"

namespace chibound {

using VertexMap = std::array<std::uint8_t, kMaxVertices>;

struct CanonicalLabeling {
    Graph canonical;           // relabeled representative
    VertexMap to_canonical{};  // original vertex -> canonical position
    // Generating set (not necessarily minimal) of the automorphism group,
    // as maps on original vertex labels.
    std::vector<VertexMap> automorphisms;
};

namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::array<std::uint32_t, kMaxVertices> best_rows{};
    std::array<std::uint8_t, kMaxVertices> best_lab{};  // position -> vertex
    bool have_best = false;
    std::vector<VertexMap> gens;
    std::array<std::uint8_t, kMaxVertices> prefix{};  // individualized vertices, by depth

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    using Lab = std::array<std::uint8_t, kMaxVertices>;
    using Ptn = std::array<std::uint8_t, kMaxVertices>;  // ptn[i]=1: i,i+1 share a cell

    // Equitable refinement: split every cell by neighbor counts into each
    // splitter cell, sub-cells ordered by ascending count, until stable.
    void refine(Lab& lab, Ptn& ptn) const {
        bool changed = true;
        while (changed) {
            changed = false;
            // snapshot cell boundaries for this round
            std::array<std::uint8_t, kMaxVertices + 1> starts{};
            int ncells = 0;
            for (int i = 0; i < n; ++i)
                if (i == 0 || ptn[i - 1] == 0) starts[ncells++] = static_cast<std::uint8_t>(i);
            starts[ncells] = static_cast<std::uint8_t>(n);

            for (int s = 0; s < ncells; ++s) {
                std::uint32_t splitter = 0;
                for (int i = starts[s]; i < starts[s + 1]; ++i) splitter |= 1u << lab[i];

                // split each current cell against this splitter
                for (int b = 0; b < n;) {
                    int e = b;
                    while (e + 1 < n && ptn[e] == 1) ++e;
                    ++e;  // cell is [b, e)
                    if (e - b >= 2) {
                        std::array<std::uint8_t, kMaxVertices> cnt{};
                        bool uniform = true;
                        for (int i = b; i < e; ++i) {
                            cnt[i] = static_cast<std::uint8_t>(
                                std::popcount(g.neighbors(lab[i]) & splitter));
                            if (cnt[i] != cnt[b]) uniform = false;
                        }
                        if (!uniform) {
                            // insertion sort by count, stable
                            for (int i = b + 1; i < e; ++i) {
                                std::uint8_t cv = cnt[i], lv = lab[i];
                                int j = i - 1;
                                while (j >= b && cnt[j] > cv) {
                                    cnt[j + 1] = cnt[j];
                                    lab[j + 1] = lab[j];
                                    --j;
                                }
                                cnt[j + 1] = cv;
                                lab[j + 1] = lv;
                            }
                            for (int i = b; i < e - 1; ++i)
                                ptn[i] = (cnt[i] == cnt[i + 1]) ? 1 : 0;
                            changed = true;
                        }
                    }
                    b = e;
                }
            }
        }
    }

    void record_leaf(const Lab& lab) {
        std::array<std::uint32_t, kMaxVertices> rows{};
        std::array<std::uint8_t, kMaxVertices> pos{};  // vertex -> position
        for (int i = 0; i < n; ++i) pos[lab[i]] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < n; ++i) {
            std::uint32_t r = 0;
            for (std::uint32_t m = g.neighbors(lab[i]); m; m &= m - 1)
                r |= 1u << pos[std::countr_zero(m)];
            rows[i] = r;
        }
        if (!have_best) {
            best_rows = rows;
            best_lab = lab;
            have_best = true;
            return;
        }
        if (rows < best_rows) {
            best_rows = rows;
            best_lab = lab;
            return;
        }
        if (rows == best_rows && lab != best_lab) {
            // equal leaves compose to an automorphism: best_lab[i] -> lab[i]
            VertexMap a{};
            for (int i = 0; i < n; ++i) a[best_lab[i]] = lab[i];
            gens.push_back(a);
        }
    }

    void search(Lab lab, Ptn ptn, int depth) {
        refine(lab, ptn);

        int cell_b = -1, cell_e = -1;
        for (int b = 0; b < n;) {
            int e = b;
            while (e + 1 < n && ptn[e] == 1) ++e;
            ++e;
            if (e - b >= 2) {
                cell_b = b;
                cell_e = e;
                break;
            }
            b = e;
        }
        if (cell_b < 0) {
            record_leaf(lab);
            return;
        }

        // candidates in ascending vertex order
        std::array<std::uint8_t, kMaxVertices> cand{};
        int csz = cell_e - cell_b;
        for (int i = 0; i < csz; ++i) cand[i] = lab[cell_b + i];
        for (int i = 1; i < csz; ++i) {
            std::uint8_t v = cand[i];
            int j = i - 1;
            while (j >= 0 && cand[j] > v) cand[j + 1] = cand[j], --j;
            cand[j + 1] = v;
        }

        std::array<std::uint8_t, kMaxVertices> tried{};
        int ntried = 0;
        for (int ci = 0; ci < csz; ++ci) {
            int v = cand[ci];
            if (ntried > 0 && in_orbit_of_tried(v, tried.data(), ntried, depth)) continue;

            Lab lab2 = lab;
            Ptn ptn2 = ptn;
            // individualize v at the front of its cell
            int vi = cell_b;
            while (lab2[vi] != v) ++vi;
            for (int i = vi; i > cell_b; --i) lab2[i] = lab2[i - 1];
            lab2[cell_b] = static_cast<std::uint8_t>(v);
            ptn2[cell_b] = 0;

            prefix[depth] = static_cast<std::uint8_t>(v);
            search(lab2, ptn2, depth + 1);
            tried[ntried++] = static_cast<std::uint8_t>(v);
        }
    }

    // Is v in the orbit of an already-tried vertex under the subgroup of
    // discovered automorphisms fixing the individualized prefix pointwise?
    bool in_orbit_of_tried(int v, const std::uint8_t* tried, int ntried, int depth) const {
        std::array<std::uint8_t, kMaxVertices> parent{};
        for (int i = 0; i < n; ++i) parent[i] = static_cast<std::uint8_t>(i);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const VertexMap& a : gens) {
            bool fixes = true;
            for (int d = 0; d < depth; ++d)
                if (a[prefix[d]] != prefix[d]) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n; ++x) {
                int rx = find(x), ry = find(a[x]);
                if (rx != ry) parent[rx] = static_cast<std::uint8_t>(ry);
            }
        }
        if (!any) return false;
        int rv = find(v);
        for (int i = 0; i < ntried; ++i)
            if (find(tried[i]) == rv) return true;
        return false;
    }
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    int n = g.order();
    detail::CanonSearch s(g);
    if (n == 0) {
        CanonicalLabeling out;
        out.canonical = g;
        return out;
    }
    detail::CanonSearch::Lab lab{};
    detail::CanonSearch::Ptn ptn{};
    for (int i = 0; i < n; ++i) {
        lab[i] = static_cast<std::uint8_t>(i);
        ptn[i] = 1;
    }
    ptn[n - 1] = 0;
    s.search(lab, ptn, 0);

    CanonicalLabeling out;
    Graph c(n);
    for (int i = 0; i < n; ++i)
        for (std::uint32_t m = s.best_rows[i]; m; m &= m - 1)
            if (int j = std::countr_zero(m); j > i) c.add_edge(i, j);
    out.canonical = c;
    for (int i = 0; i < n; ++i) out.to_canonical[s.best_lab[i]] = static_cast<std::uint8_t>(i);
    out.automorphisms = std::move(s.gens);
    return out;
}

// Relabeling-invariant label string: the graph6 encoding of the canonical
// representative. Two graphs are isomorphic iff their forms are equal.
inline std::string canonical_form(const Graph& g) {
    return to_graph6(canonical_labeling(g).canonical);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_labeling(a).canonical == canonical_labeling(b).canonical;
}

}  // namespace chibound

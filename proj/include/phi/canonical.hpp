#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "phi/graph.hpp"

namespace phi {

namespace detail {

// Iterated neighbor-count refinement. Cells end up ordered by an
// isomorphism-invariant key (first pass splits by degree, ascending), so two
// isomorphic graphs always produce matching cell structures.
inline std::vector<std::vector<int>> refine_cells(const Graph& g) {
    std::vector<std::vector<int>> cells(1);
    for (int v = 0; v < g.n; ++v) cells[0].push_back(v);
    for (;;) {
        std::uint32_t cell_mask[kMaxVertices];
        for (std::size_t c = 0; c < cells.size(); ++c) {
            cell_mask[c] = 0;
            for (int v : cells[c]) cell_mask[c] |= vbit(v);
        }
        std::vector<std::vector<int>> next;
        for (auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> split;
            for (int v : cell) {
                std::vector<int> sig(cells.size());
                for (std::size_t c = 0; c < cells.size(); ++c)
                    sig[c] = std::popcount(g.adj[v] & cell_mask[c]);
                split[sig].push_back(v);
            }
            for (auto& [sig, part] : split) next.push_back(std::move(part));
        }
        if (next.size() == cells.size()) return next;
        cells = std::move(next);
    }
}

// Branch-and-bound minimization of the upper-triangle bit encoding over all
// labelings compatible with the refined cells. chunk[k] holds the adjacency
// bits of the vertex at position k towards positions 0..k-1, earliest placed
// vertex in the most significant bit (graph6 column order).
struct CanonicalSearch {
    const Graph& g;
    std::vector<int> cell_of_pos;              // cell owning each position
    std::vector<std::vector<int>> cells;
    std::vector<int> perm, best_perm;
    std::vector<std::uint32_t> chunks, best;
    std::uint32_t used = 0;
    bool have_best = false;

    explicit CanonicalSearch(const Graph& graph) : g(graph) {
        cells = refine_cells(g);
        perm.resize(g.n);
        chunks.assign(g.n, 0);
        cell_of_pos.reserve(g.n);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (std::size_t i = 0; i < cells[c].size(); ++i) cell_of_pos.push_back(static_cast<int>(c));
    }

    // `tight` = chunks[0..k-1] equals the current best prefix. Replacements
    // always happen inside the subtree that shares the new best's prefix, so a
    // true flag stays true; a stale false only costs pruning, hence the full
    // comparison at the leaves.
    void dfs(int k, bool tight) {
        if (k == g.n) {
            if (!have_best || chunks < best) {
                best = chunks;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        for (int v : cells[cell_of_pos[k]]) {
            if (used >> v & 1u) continue;
            std::uint32_t c = 0;
            for (int i = 0; i < k; ++i) c = c << 1 | (g.has_edge(perm[i], v) ? 1u : 0u);
            bool t = tight;
            if (have_best && tight) {
                if (c > best[k]) continue;
                if (c < best[k]) t = false;
            }
            perm[k] = v;
            chunks[k] = c;
            used |= vbit(v);
            dfs(k + 1, t);
            used &= ~vbit(v);
        }
    }
};

}  // namespace detail

// Canonical labeled representative: isomorphic graphs map to the identical
// graph. Exhaustive within refinement cells; intended for graphs up to ~10
// vertices (larger inputs work but highly symmetric ones get slow).
inline Graph canonical_form(const Graph& g) {
    if (g.n <= 1) return g;
    detail::CanonicalSearch s(g);
    s.dfs(0, true);
    std::vector<int> relab(g.n);
    for (int pos = 0; pos < g.n; ++pos) relab[s.best_perm[pos]] = pos;
    return relabeled(g, relab);
}

inline std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

}  // namespace phi

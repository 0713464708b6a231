#pragma once

#include <bit>
#include <cstdint>

#include "phi/graph.hpp"

namespace phi {

namespace detail {

// Counting DFS over an order in which every vertex after the first has at
// least one earlier neighbor, so branching is at most 2 past the root. The
// root color is fixed and the result multiplied by 3.
struct Chi3Backtracker {
    const Graph& g;
    int order[kMaxVertices];
    int count = 0;
    std::uint8_t color[kMaxVertices];

    explicit Chi3Backtracker(const Graph& graph) : g(graph) {}

    std::int64_t run(std::uint32_t mask) {
        int best = -1;
        std::uint32_t row = mask;
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (best < 0 || g.degree(v) > g.degree(best)) best = v;
        }
        count = 0;
        std::uint32_t placed = 0;
        order[count++] = best;
        placed |= vbit(best);
        while (placed != mask) {
            int pick = -1, pick_nb = -1;
            row = mask & ~placed;
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                int nb = std::popcount(g.adj[v] & placed);
                if (nb > pick_nb || (nb == pick_nb && g.degree(v) > g.degree(pick)))
                    pick = v, pick_nb = nb;
            }
            order[count++] = pick;
            placed |= vbit(pick);
        }
        color[best] = 0;
        return 3 * dfs(1);
    }

    std::int64_t dfs(int k) {
        if (k == count) return 1;
        int v = order[k];
        std::uint32_t row = g.adj[v];
        std::uint8_t banned = 0;
        for (int i = 0; i < k; ++i)
            if (row >> order[i] & 1u) banned |= std::uint8_t(1) << color[order[i]];
        std::int64_t total = 0;
        for (std::uint8_t c = 0; c < 3; ++c) {
            if (banned >> c & 1u) continue;
            color[v] = c;
            total += dfs(k + 1);
        }
        return total;
    }
};

}  // namespace detail

// Number of proper vertex colorings in three colors. Components are handled
// independently; isolated vertices contribute a factor 3 and degree-1 vertices
// a factor 2, so only 2-cores are enumerated.
inline std::int64_t chi3(const Graph& g) {
    std::int64_t total = 1;
    std::uint32_t remaining = g.vertex_mask();
    detail::Chi3Backtracker bt(g);
    while (remaining) {
        std::uint32_t comp = component_of(g, std::countr_zero(remaining)) & remaining;
        remaining &= ~comp;
        std::uint32_t mask = comp;
        for (bool changed = true; changed && mask;) {
            changed = false;
            std::uint32_t row = mask;
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                int d = std::popcount(g.adj[v] & mask);
                if (d <= 1) {
                    total *= (d == 0 ? 3 : 2);
                    mask &= ~vbit(v);
                    changed = true;
                }
            }
        }
        if (mask) total *= bt.run(mask);
        if (total == 0) return 0;
    }
    return total;
}

}  // namespace phi

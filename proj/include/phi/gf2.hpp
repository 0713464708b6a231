#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "phi/graph.hpp"

namespace phi {

// Square matrix over GF(2), rows as bitsets.
struct GF2Matrix {
    int order = 0;
    std::array<std::uint32_t, kMaxVertices> rows{};
};

inline int gf2_rank(GF2Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.order && rank < m.order; ++col) {
        int p = -1;
        for (int r = rank; r < m.order; ++r)
            if (m.rows[r] >> col & 1u) {
                p = r;
                break;
            }
        if (p < 0) continue;
        std::swap(m.rows[p], m.rows[rank]);
        for (int r = 0; r < m.order; ++r)
            if (r != rank && (m.rows[r] >> col & 1u)) m.rows[r] ^= m.rows[rank];
        ++rank;
    }
    return rank;
}

inline int corank(const GF2Matrix& m) { return m.order - gf2_rank(m); }

// Adjacency matrix of g over GF(2): symmetric, zero diagonal.
inline GF2Matrix adjacency_gf2(const Graph& g) {
    GF2Matrix m;
    m.order = g.n;
    for (int v = 0; v < g.n; ++v) m.rows[v] = g.adj[v];
    return m;
}

}  // namespace phi

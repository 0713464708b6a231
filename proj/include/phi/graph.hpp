#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phi/guard.hpp"

namespace phi {

inline constexpr int kMaxVertices = 32;

// Subset of vertex indices as a bitmask.
using VertexSet = std::uint32_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

// Labeled simple graph on at most 32 vertices; adj[v] is the neighbor set of v.
// Invariants: no loops, symmetric adjacency, bits >= n always zero.
struct Graph {
    int n = 0;
    std::array<std::uint32_t, kMaxVertices> adj{};

    Graph() = default;
    explicit Graph(int n_) : n(n_) {
        if (n_ < 0 || n_ > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count out of range");
    }

    VertexSet vertex_mask() const {
        return n == kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
    }

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return std::popcount(adj[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }

    void set_edge(int u, int v) {
        adj[u] |= vbit(v);
        adj[v] |= vbit(u);
    }
    void clear_edge(int u, int v) {
        adj[u] &= ~vbit(v);
        adj[v] &= ~vbit(u);
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.adj == b.adj; }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }
};

inline void require_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.n) throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

inline void require_pair(const Graph& g, int u, int v, const char* who) {
    require_vertex(g, u, who);
    require_vertex(g, v, who);
    if (u == v) throw std::invalid_argument(std::string(who) + ": endpoints must differ");
}

// Unordered edges as canonically ordered (u < v) pairs, lexicographic.
inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);
    return edges;
}

// ---- graph6 (header 63+n, column-major upper triangle, 6 bits per byte) ----

inline Graph from_graph6(std::string_view s) {
    if (s.empty()) throw FormatError("graph6: empty string");
    unsigned char h = static_cast<unsigned char>(s[0]);
    if (h < 63 || h > 126) throw FormatError("graph6: header byte out of range");
    int n = h - 63;
    if (n > kMaxVertices) throw FormatError("graph6: more than 32 vertices unsupported");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes) throw FormatError("graph6: wrong length for stated order");
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            unsigned char b = static_cast<unsigned char>(s[1 + k / 6]);
            if (b < 63 || b > 126) throw FormatError("graph6: data byte out of range");
            if ((b - 63) >> (5 - k % 6) & 1) g.set_edge(i, j);
        }
    }
    // trailing padding bits of the last byte must be zero
    for (; k < 6 * nbytes; ++k) {
        unsigned char b = static_cast<unsigned char>(s[1 + k / 6]);
        if (b < 63 || b > 126) throw FormatError("graph6: data byte out of range");
        if ((b - 63) >> (5 - k % 6) & 1) throw FormatError("graph6: nonzero padding bits");
    }
    return g;
}

inline std::string to_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(63 + g.n));
    int acc = 0, nb = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

// ---- constructive operations ----

// Vertices of U relabeled 0..|U|-1 preserving order; edges of g inside U.
inline Graph induced_subgraph(const Graph& g, VertexSet U) {
    if (U & ~g.vertex_mask()) throw std::invalid_argument("induced_subgraph: U not a vertex subset");
    int map[kMaxVertices];
    int m = 0;
    for (int v = 0; v < g.n; ++v)
        if (U >> v & 1u) map[v] = m++;
    Graph r(m);
    for (int v = 0; v < g.n; ++v) {
        if (!(U >> v & 1u)) continue;
        std::uint32_t row = g.adj[v] & U;
        while (row) {
            int w = std::countr_zero(row);
            row &= row - 1;
            r.adj[map[v]] |= vbit(map[w]);
        }
    }
    return r;
}

// Same vertex set, edge set exactly `edges` (each must be an edge of g).
inline Graph spanning_subgraph(const Graph& g, const std::vector<std::pair<int, int>>& edges) {
    Graph r(g.n);
    for (auto [u, v] : edges) {
        require_pair(g, u, v, "spanning_subgraph");
        if (!g.has_edge(u, v)) throw std::invalid_argument("spanning_subgraph: pair is not an edge");
        r.set_edge(u, v);
    }
    return r;
}

inline Graph add_edge(const Graph& g, int u, int v) {
    require_pair(g, u, v, "add_edge");
    Graph r = g;
    r.set_edge(u, v);
    return r;
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    require_pair(g, u, v, "delete_edge");
    Graph r = g;
    r.clear_edge(u, v);
    return r;
}

// Replaces N(u) \ {v} by (N(u) ^ N(v)) \ {u, v}; the u-v adjacency, N(v) and
// all edges among other vertices are unchanged. Involutive.
inline Graph pivot(const Graph& g, int u, int v) {
    require_pair(g, u, v, "pivot");
    std::uint32_t keep_uv = g.adj[u] & vbit(v);
    std::uint32_t nu = (g.adj[u] ^ g.adj[v]) & ~(vbit(u) | vbit(v));
    Graph r = g;
    for (int w = 0; w < g.n; ++w) r.adj[w] &= ~vbit(u);
    r.adj[u] = nu | keep_uv;
    std::uint32_t row = nu | keep_uv;
    while (row) {
        int w = std::countr_zero(row);
        row &= row - 1;
        r.adj[w] |= vbit(u);
    }
    return r;
}

// Deletes u and v and adds one new vertex (labeled last) adjacent to
// (N(u) ^ N(v)) \ {u, v}. Defined for non-adjacent pairs as well.
inline Graph contract_sd(const Graph& g, int u, int v) {
    require_pair(g, u, v, "contract_sd");
    std::uint32_t nsd = (g.adj[u] ^ g.adj[v]) & ~(vbit(u) | vbit(v));
    int map[kMaxVertices];
    int m = 0;
    for (int w = 0; w < g.n; ++w)
        if (w != u && w != v) map[w] = m++;
    Graph r(g.n - 1);
    for (int w = 0; w < g.n; ++w) {
        if (w == u || w == v) continue;
        std::uint32_t row = g.adj[w] & ~(vbit(u) | vbit(v));
        while (row) {
            int x = std::countr_zero(row);
            row &= row - 1;
            r.adj[map[w]] |= vbit(map[x]);
        }
        if (nsd >> w & 1u) r.set_edge(map[w], g.n - 2);
    }
    return r;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n + b.n > kMaxVertices) throw std::invalid_argument("disjoint_union: exceeds 32 vertices");
    Graph r(a.n + b.n);
    for (int v = 0; v < a.n; ++v) r.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) r.adj[a.n + v] = b.adj[v] << a.n;
    return r;
}

// One new vertex, labeled g.n, adjacent to `neighbors`.
inline Graph add_vertex(const Graph& g, VertexSet neighbors) {
    if (g.n + 1 > kMaxVertices) throw std::invalid_argument("add_vertex: exceeds 32 vertices");
    if (neighbors & ~g.vertex_mask()) throw std::invalid_argument("add_vertex: bad neighbor set");
    Graph r = g;
    r.n = g.n + 1;
    r.adj[g.n] = neighbors;
    std::uint32_t row = neighbors;
    while (row) {
        int w = std::countr_zero(row);
        row &= row - 1;
        r.adj[w] |= vbit(g.n);
    }
    return r;
}

inline Graph remove_vertex(const Graph& g, int v) {
    require_vertex(g, v, "remove_vertex");
    return induced_subgraph(g, g.vertex_mask() & ~vbit(v));
}

// perm maps old label -> new label.
inline Graph relabeled(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n) throw std::invalid_argument("relabeled: size mismatch");
    Graph r(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::uint32_t row = g.adj[v];
        while (row) {
            int w = std::countr_zero(row);
            row &= row - 1;
            r.adj[perm[v]] |= vbit(perm[w]);
        }
    }
    return r;
}

// ---- queries ----

// Number of edges between U and its complement.
inline int cut_size(const Graph& g, VertexSet U) {
    if (U & ~g.vertex_mask()) throw std::invalid_argument("cut_size: U not a vertex subset");
    int c = 0;
    std::uint32_t row = U;
    while (row) {
        int v = std::countr_zero(row);
        row &= row - 1;
        c += std::popcount(g.adj[v] & ~U);
    }
    return c;
}

// Every vertex degree even; connectivity is not required.
inline bool is_eulerian(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) & 1) return false;
    return true;
}

inline int component_count(const Graph& g) {
    std::uint32_t seen = 0;
    int c = 0;
    std::uint32_t all = g.vertex_mask();
    while (seen != all) {
        std::uint32_t comp = std::uint32_t{1} << std::countr_zero(~seen & all);
        for (;;) {
            std::uint32_t grown = comp;
            std::uint32_t row = comp;
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                grown |= g.adj[v];
            }
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        ++c;
    }
    return c;
}

// Vertex set of the connected component containing v.
inline VertexSet component_of(const Graph& g, int v) {
    std::uint32_t comp = vbit(v);
    for (;;) {
        std::uint32_t grown = comp;
        std::uint32_t row = comp;
        while (row) {
            int w = std::countr_zero(row);
            row &= row - 1;
            grown |= g.adj[w];
        }
        if (grown == comp) return comp;
        comp = grown;
    }
}

}  // namespace phi

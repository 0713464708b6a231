#pragma once

#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "phi/canonical.hpp"
#include "phi/chi3.hpp"
#include "phi/dyadic.hpp"
#include "phi/gf2.hpp"
#include "phi/graph.hpp"
#include "phi/guard.hpp"

namespace phi {

// Size guards for the exponential evaluators. Zero means unlimited.
struct EvalLimits {
    int direct_max_edges = 20;      // phi_direct sums over 2^|E| edge subsets
    int components_max_edges = 20;  // phi_components, same cost
    int subset_max_n = 24;          // phi_eulerian and psi sum over 2^n vertex subsets
    std::uint64_t delcont_max_nodes = 0;  // recursion kernel budget, 0 = unlimited
};

inline constexpr EvalLimits kDefaultLimits{};

// phi(G) = 2^{-3n} sum over edge subsets E' of (-2)^|E'| chi3(G restricted to E').
inline Dyadic phi_direct(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    auto edges = edge_list(g);
    int m = static_cast<int>(edges.size());
    if (lim.direct_max_edges && m > lim.direct_max_edges)
        throw GuardError("phi_direct", lim.direct_max_edges, m);
    // bucket chi3 sums by subset size; |bucket| <= C(m, m/2) * 3^n fits __int128
    unsigned __int128 acc[33] = {};
    std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph s(g.n);
        std::uint64_t mm = mask;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            s.set_edge(edges[i].first, edges[i].second);
        }
        acc[std::popcount(mask)] += static_cast<unsigned __int128>(chi3(s));
    }
    BigInt sum = 0;
    for (int k = 0; k <= m; ++k) {
        BigInt term = BigInt(acc[k]) << k;
        sum += (k & 1) ? -term : term;
    }
    return Dyadic(sum, -3 * g.n);
}

// phi(G) = 2^{-3n} sum over U with G|_U Eulerian of (-1)^cut(U) 2^|U|.
inline Dyadic phi_eulerian(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    if (lim.subset_max_n && g.n > lim.subset_max_n)
        throw GuardError("phi_eulerian", lim.subset_max_n, g.n);
    std::int64_t acc = 0;  // bounded by 3^n < 2^51 for n <= 32
    std::uint32_t all = g.vertex_mask();
    for (std::uint32_t U = 0;; ++U) {
        bool eulerian = true;
        int cut = 0;
        std::uint32_t row = U;
        while (row) {
            int v = std::countr_zero(row);
            row &= row - 1;
            if (std::popcount(g.adj[v] & U) & 1) {
                eulerian = false;
                break;
            }
            cut += std::popcount(g.adj[v] & ~U);
        }
        if (eulerian) {
            std::int64_t term = std::int64_t{1} << std::popcount(U);
            acc += (cut & 1) ? -term : term;
        }
        if (U == all) break;
    }
    return Dyadic(BigInt(acc), -3 * g.n);
}

// phi(G) = 2^{-3n} (-1)^|E| sum over E' of (-2)^|E'| 3^{c(G|_E')}.
inline Dyadic phi_components(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    auto edges = edge_list(g);
    int m = static_cast<int>(edges.size());
    if (lim.components_max_edges && m > lim.components_max_edges)
        throw GuardError("phi_components", lim.components_max_edges, m);
    // count[k][c]: subsets of size k whose spanning subgraph has c components
    std::vector<std::vector<std::int64_t>> count(m + 1, std::vector<std::int64_t>(g.n + 1, 0));
    std::uint64_t total = std::uint64_t{1} << m;
    int parent[kMaxVertices];
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (int v = 0; v < g.n; ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int comps = g.n;
        std::uint64_t mm = mask;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            int a = find(edges[i].first), b = find(edges[i].second);
            if (a != b) {
                parent[a] = b;
                --comps;
            }
        }
        ++count[std::popcount(mask)][comps];
    }
    BigInt sum = 0;
    for (int k = 0; k <= m; ++k)
        for (int c = 0; c <= g.n; ++c) {
            if (!count[k][c]) continue;
            BigInt term = (BigInt(count[k][c]) << k) * boost::multiprecision::pow(BigInt(3), c);
            sum += (k & 1) ? -term : term;
        }
    if (m & 1) sum = -sum;
    return Dyadic(sum, -3 * g.n);
}

// Memo for the deletion-contraction recursion, keyed by canonical graph6.
// Entries never change once present; concurrent get-or-insert is last-writer-
// wins, which is harmless because values are deterministic.
class EvalCache {
  public:
    std::optional<Dyadic> get(const std::string& key) const {
        std::shared_lock lk(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void put(const std::string& key, const Dyadic& value) {
        std::unique_lock lk(mu_);
        map_.emplace(key, value);
    }
    std::size_t size() const {
        std::shared_lock lk(mu_);
        return map_.size();
    }

  private:
    mutable std::shared_mutex mu_;
    std::unordered_map<std::string, Dyadic> map_;
};

namespace detail {

// Canonical keys pay off up to moderate sizes; above that a raw key still
// caches exact repeats.
inline std::string delcont_key(const Graph& g) {
    return g.n <= 12 ? canonical_key(g) : "raw:" + to_graph6(g);
}

inline Dyadic delcont_rec(const Graph& g, EvalCache& cache, const EvalLimits& lim,
                          std::uint64_t& nodes) {
    if (g.n == 0) return Dyadic(1);
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d == 0) return Dyadic(3, -3) * delcont_rec(remove_vertex(g, v), cache, lim, nodes);
        if (d == 1) return Dyadic(-1, -3) * delcont_rec(remove_vertex(g, v), cache, lim, nodes);
    }
    std::uint32_t comp = component_of(g, 0);
    if (comp != g.vertex_mask())
        return delcont_rec(induced_subgraph(g, comp), cache, lim, nodes) *
               delcont_rec(induced_subgraph(g, g.vertex_mask() & ~comp), cache, lim, nodes);

    std::string key = delcont_key(g);
    if (auto hit = cache.get(key)) return *hit;
    if (lim.delcont_max_nodes && ++nodes > lim.delcont_max_nodes)
        throw GuardError("phi_delcont", lim.delcont_max_nodes, nodes);

    int bu = -1, bv = -1, score = -1;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && g.degree(u) + g.degree(v) > score) {
                score = g.degree(u) + g.degree(v);
                bu = u;
                bv = v;
            }
    Dyadic val = -delcont_rec(delete_edge(g, bu, bv), cache, lim, nodes) +
                 Dyadic(1, -2) * delcont_rec(contract_sd(g, bu, bv), cache, lim, nodes);
    cache.put(key, val);
    return val;
}

}  // namespace detail

// Recursive evaluator: strips isolated vertices (factor 3/8) and leaves
// (factor -1/8), multiplies over components, then recurses on an edge with
// phi(G) = -phi(G - uv) + 1/4 phi(contract_sd(G, u, v)), memoized.
inline Dyadic phi_delcont(const Graph& g, EvalCache& cache, const EvalLimits& lim = kDefaultLimits) {
    std::uint64_t nodes = 0;
    return detail::delcont_rec(g, cache, lim, nodes);
}

inline Dyadic phi_delcont(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    EvalCache scratch;
    return phi_delcont(g, scratch, lim);
}

// psi(G) = 2^{-2n} sum over U of (-1/2)^{n-|U|} 2^{corank A(G|_U)}, i.e.
// 2^{-3n} sum over U of (-1)^{n-|U|} 2^{|U| + corank}.
inline Dyadic psi(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    if (lim.subset_max_n && g.n > lim.subset_max_n)
        throw GuardError("psi", lim.subset_max_n, g.n);
    std::int64_t acc = 0;  // bounded by 5^n, fine for n <= 24
    std::uint32_t all = g.vertex_mask();
    int pos[kMaxVertices];
    for (std::uint32_t U = 0;; ++U) {
        int k = 0;
        std::uint32_t row = U;
        while (row) {
            pos[k++] = std::countr_zero(row);
            row &= row - 1;
        }
        GF2Matrix m;
        m.order = k;
        for (int i = 0; i < k; ++i) {
            std::uint32_t r = 0;
            for (int j = 0; j < k; ++j)
                if (g.has_edge(pos[i], pos[j])) r |= std::uint32_t{1} << j;
            m.rows[i] = r;
        }
        std::int64_t term = std::int64_t{1} << (k + corank(m));
        acc += ((g.n - k) & 1) ? -term : term;
        if (U == all) break;
    }
    return Dyadic(BigInt(acc), -3 * g.n);
}

// Picks the cheapest exact phi evaluator for the size at hand.
inline Dyadic phi_of(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    if (!lim.subset_max_n || g.n <= lim.subset_max_n) return phi_eulerian(g, lim);
    return phi_delcont(g, lim);
}

struct BoundReport {
    Dyadic value;
    Dyadic bound;  // (3/8)^n
    bool nonzero = false;
    bool within = false;
    bool equality = false;
};

// 0 < |phi(G)| <= (3/8)^n; violations are reported, not thrown.
inline BoundReport check_bound(const Graph& g, const EvalLimits& lim = kDefaultLimits) {
    BoundReport r;
    r.value = phi_of(g, lim);
    r.bound = Dyadic(boost::multiprecision::pow(BigInt(3), g.n), -3 * g.n);
    int c = cmp_abs(r.value, r.bound);
    r.nonzero = !r.value.is_zero();
    r.within = c <= 0;
    r.equality = c == 0;
    return r;
}

}  // namespace phi

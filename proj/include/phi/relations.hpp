#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "phi/formal_sum.hpp"
#include "phi/graph.hpp"
#include "phi/invariants.hpp"

namespace phi {

// phi(G) + phi(G - uv) - 1/4 phi(contract_sd(G, u, v)) == 0, for an edge uv.
inline bool check_delcont(const Graph& g, int u, int v, const EvalLimits& lim = kDefaultLimits) {
    require_pair(g, u, v, "check_delcont");
    if (!g.has_edge(u, v)) throw std::invalid_argument("check_delcont: uv is not an edge");
    Dyadic lhs = phi_eulerian(g, lim) + phi_eulerian(delete_edge(g, u, v), lim) -
                 Dyadic(1, -2) * phi_eulerian(contract_sd(g, u, v), lim);
    return lhs.is_zero();
}

// The graph 4T relation: expanding the dashed pair uv over g equals expanding
// it over pivot(g, u, v).
inline bool check_4t(const Graph& g, int u, int v, const EvalLimits& lim = kDefaultLimits) {
    require_pair(g, u, v, "check_4t");
    std::vector<std::pair<int, int>> dash{{u, v}};
    Dyadic lhs = eval_sum(expand_dashed(g, dash), lim);
    Dyadic rhs = eval_sum(expand_dashed(pivot(g, u, v), dash), lim);
    return lhs == rhs;
}

namespace detail {

// host plus new vertices attached to the given host subsets, labeled
// host.n, host.n + 1, ...
inline Graph attach(const Graph& host, const std::vector<VertexSet>& neighbor_sets) {
    Graph g = host;
    for (VertexSet s : neighbor_sets) g = add_vertex(g, s);
    return g;
}

}  // namespace detail

// Triangle identity residual, LHS - RHS:
//   LHS: host + v1~x, v2~y, v3~z with all three pairs among them dashed;
//   RHS: 1/2 [host + u1~(x^y), u2~(y^z) with the pair u1u2 dashed].
inline FormalSum triangle_residual(const Graph& host, VertexSet x, VertexSet y, VertexSet z) {
    int n = host.n;
    Graph L = detail::attach(host, {x, y, z});
    FormalSum r = expand_dashed(L, {{n, n + 1}, {n, n + 2}, {n + 1, n + 2}});
    Graph R = detail::attach(host, {x ^ y, y ^ z});
    r.append(expand_dashed(R, {{n, n + 1}}), Dyadic(-1, -1));
    return r;
}

inline bool check_triangle(const Graph& host, VertexSet x, VertexSet y, VertexSet z,
                           const EvalLimits& lim = kDefaultLimits) {
    return eval_sum(triangle_residual(host, x, y, z), lim).is_zero();
}

// Graph 6T residual, LHS - RHS, for variant 1 or 2:
//   LHS: host + v1~x, v2~y, v3~z, pairs {v1v2} and {v2v3} dashed, with the
//        v1v3 edge absent (variant 1) or present (variant 2);
//   RHS: 1/2 [u1~y, u2~(x^y^z), no edge] minus
//        1/2 [u1~(x^y), u2~(y^z), edge present for variant 1, absent for 2].
inline FormalSum sixt_residual(const Graph& host, VertexSet x, VertexSet y, VertexSet z,
                               int variant) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("sixt_residual: variant is 1 or 2");
    int n = host.n;
    Graph L = detail::attach(host, {x, y, z});
    if (variant == 2) L = add_edge(L, n, n + 2);
    FormalSum r = expand_dashed(L, {{n, n + 1}, {n + 1, n + 2}});
    Graph R1 = detail::attach(host, {y, x ^ y ^ z});
    r.add(Dyadic(-1, -1), R1);
    Graph R2 = detail::attach(host, {x ^ y, y ^ z});
    if (variant == 1) R2 = add_edge(R2, n, n + 1);
    r.add(Dyadic(1, -1), R2);
    return r;
}

inline bool check_6t(const Graph& host, VertexSet x, VertexSet y, VertexSet z, int variant,
                     const EvalLimits& lim = kDefaultLimits) {
    return eval_sum(sixt_residual(host, x, y, z, variant), lim).is_zero();
}

// Deletion-contraction variant residual, LHS - RHS:
//   LHS: host + v1~us, v2~vs joined by a solid edge, plus m~ws with the pairs
//        {m,v1} and {m,v2} dashed;
//   RHS: -(the same without the v1v2 edge)
//        - 1/2 [host + a~ws, b~(us^vs) with the pair ab dashed].
inline FormalSum delcont_var_residual(const Graph& host, VertexSet us, VertexSet vs, VertexSet ws) {
    int n = host.n;
    Graph A = add_edge(detail::attach(host, {us, vs, ws}), n, n + 1);
    std::vector<std::pair<int, int>> dash{{n + 2, n}, {n + 2, n + 1}};
    FormalSum r = expand_dashed(A, dash);
    r.append(expand_dashed(delete_edge(A, n, n + 1), dash), Dyadic(1));
    Graph C = detail::attach(host, {ws, us ^ vs});
    r.append(expand_dashed(C, {{n, n + 1}}), Dyadic(1, -1));
    return r;
}

inline bool check_delcont_var(const Graph& host, VertexSet us, VertexSet vs, VertexSet ws,
                              const EvalLimits& lim = kDefaultLimits) {
    return eval_sum(delcont_var_residual(host, us, vs, ws), lim).is_zero();
}

// The difference of the two 6T residuals cancels the triangle residual term by
// term, so (6T variant 2) - (6T variant 1) IS the triangle identity.
inline bool check_6t_difference_is_triangle(const Graph& host, VertexSet x, VertexSet y,
                                            VertexSet z) {
    FormalSum s = sixt_residual(host, x, y, z, 2);
    s.append(sixt_residual(host, x, y, z, 1), Dyadic(-1));
    s.append(triangle_residual(host, x, y, z), Dyadic(-1));
    return is_symbolically_zero(s);
}

}  // namespace phi

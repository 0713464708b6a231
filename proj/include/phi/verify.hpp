#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "phi/chords.hpp"
#include "phi/enumerate.hpp"
#include "phi/invariants.hpp"
#include "phi/parallel.hpp"
#include "phi/relations.hpp"

namespace phi {

struct VerifyOptions {
    int max_n = 6;
    int max_chords = 5;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
    EvalLimits limits{};
};

struct Failure {
    std::string instance;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::uint64_t instances = 0;
    std::vector<Failure> failures;
    double wall_ms = 0;
    bool report_only = false;  // findings are reported, never fatal
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"delcont", "fourT",  "sixT",
                                                "triangle", "dcv",   "cv",
                                                "bound",    "bridge", "conjecture"};
    return names;
}

namespace detail {

// Deterministic sweep driver: instances are a fixed list of thunks returning
// an empty string on success or a failure detail; failures merge in instance
// order regardless of thread count.
struct Sweep {
    std::vector<std::string> instances;
    std::vector<std::function<std::string()>> checks;

    void add(std::string instance, std::function<std::string()> check) {
        instances.push_back(std::move(instance));
        checks.push_back(std::move(check));
    }

    void run_into(SuiteResult& r, int threads) const {
        std::vector<std::string> details(checks.size());
        parallel_for(checks.size(), threads, [&](std::uint64_t i) { details[i] = checks[i](); });
        r.instances += checks.size();
        for (std::size_t i = 0; i < checks.size(); ++i)
            if (!details[i].empty()) r.failures.push_back({instances[i], details[i]});
    }
};

inline Graph random_graph(int n, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1u) g.set_edge(u, v);
    return g;
}

inline std::string dy(const Dyadic& d) { return to_pow2_string(d); }

}  // namespace detail

// Deletion-contraction identity over every (class, edge) with n <= max_n.
inline SuiteResult suite_delcont(const VerifyOptions& opt) {
    SuiteResult r{"delcont"};
    detail::Sweep sweep;
    for (int n = 0; n <= opt.max_n; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (auto [u, v] : edge_list(g))
                sweep.add(to_graph6(g) + " uv=(" + std::to_string(u) + "," + std::to_string(v) + ")",
                          [g, u = u, v = v, lim = opt.limits] {
                              return check_delcont(g, u, v, lim) ? "" : "identity violated";
                          });
    sweep.run_into(r, opt.threads);
    return r;
}

// Graph 4T relations: exhaustive over classes with n <= min(max_n, 6) and all
// ordered pairs, plus seeded random instances at n = max_n when max_n > 6.
inline SuiteResult suite_fourT(const VerifyOptions& opt) {
    SuiteResult r{"fourT"};
    detail::Sweep sweep;
    int exhaustive_n = std::min(opt.max_n, 6);
    for (int n = 2; n <= exhaustive_n; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    sweep.add(to_graph6(g) + " uv=(" + std::to_string(u) + "," + std::to_string(v) + ")",
                              [g, u, v, lim = opt.limits] {
                                  return check_4t(g, u, v, lim) ? "" : "4T violated";
                              });
                }
    if (opt.max_n > 6) {
        int n = opt.max_n;
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            sweep.add("random#" + std::to_string(i),
                      [i, n, seed = opt.seed, lim = opt.limits]() -> std::string {
                          std::mt19937_64 rng(mix64(seed ^ (i * 0x51ed2701ULL)));
                          Graph g = detail::random_graph(n, rng);
                          int u = static_cast<int>(rng() % n);
                          int v = static_cast<int>(rng() % (n - 1));
                          if (v >= u) ++v;
                          if (check_4t(g, u, v, lim)) return "";
                          return "4T violated on " + to_graph6(g) + " uv=(" + std::to_string(u) +
                                 "," + std::to_string(v) + ")";
                      });
        }
    }
    sweep.run_into(r, opt.threads);
    return r;
}

namespace detail {

template <class Check>
void sweep_attachment_triples(Sweep& sweep, int max_host_n, std::uint64_t extra_samples,
                              int extra_host_n, std::uint64_t seed, Check&& check) {
    for (int n = 0; n <= max_host_n; ++n)
        for (const Graph& host : enumerate_graphs(n)) {
            std::uint32_t subsets = std::uint32_t{1} << n;
            for (std::uint32_t x = 0; x < subsets; ++x)
                for (std::uint32_t y = 0; y < subsets; ++y)
                    for (std::uint32_t z = 0; z < subsets; ++z)
                        sweep.add(to_graph6(host) + " xyz=(" + std::to_string(x) + "," +
                                      std::to_string(y) + "," + std::to_string(z) + ")",
                                  [host, x, y, z, check] { return check(host, x, y, z); });
        }
    for (std::uint64_t i = 0; i < extra_samples; ++i)
        sweep.add("random#" + std::to_string(i),
                  [i, extra_host_n, seed, check]() -> std::string {
                      std::mt19937_64 rng(mix64(seed ^ (i * 0x9d5f3aedULL)));
                      Graph host = random_graph(extra_host_n, rng);
                      std::uint32_t m = host.vertex_mask();
                      std::string res = check(host, static_cast<std::uint32_t>(rng()) & m,
                                              static_cast<std::uint32_t>(rng()) & m,
                                              static_cast<std::uint32_t>(rng()) & m);
                      return res.empty() ? "" : res + " on host " + to_graph6(host);
                  });
}

}  // namespace detail

// Triangle identity over all hosts with <= min(max_n, 3) vertices and all
// attachment triples, plus random triples on 4-vertex hosts.
inline SuiteResult suite_triangle(const VerifyOptions& opt) {
    SuiteResult r{"triangle"};
    detail::Sweep sweep;
    std::uint64_t extra = opt.max_n >= 4 ? std::min<std::uint64_t>(opt.samples, 1000) : 0;
    detail::sweep_attachment_triples(
        sweep, std::min(opt.max_n, 3), extra, 4, opt.seed,
        [lim = opt.limits](const Graph& h, VertexSet x, VertexSet y, VertexSet z) -> std::string {
            return check_triangle(h, x, y, z, lim) ? "" : "triangle identity violated";
        });
    sweep.run_into(r, opt.threads);
    return r;
}

// Both graph 6T relations over the same host/attachment grid.
inline SuiteResult suite_sixT(const VerifyOptions& opt) {
    SuiteResult r{"sixT"};
    detail::Sweep sweep;
    std::uint64_t extra = opt.max_n >= 4 ? std::min<std::uint64_t>(opt.samples, 1000) : 0;
    detail::sweep_attachment_triples(
        sweep, std::min(opt.max_n, 3), extra, 4, opt.seed,
        [lim = opt.limits](const Graph& h, VertexSet x, VertexSet y, VertexSet z) -> std::string {
            if (!check_6t(h, x, y, z, 1, lim)) return "6T variant 1 violated";
            if (!check_6t(h, x, y, z, 2, lim)) return "6T variant 2 violated";
            return "";
        });
    sweep.run_into(r, opt.threads);
    return r;
}

// Deletion-contraction variant identity; hosts <= min(max_n, 2) exhaustively,
// plus random triples on 3-vertex hosts.
inline SuiteResult suite_dcv(const VerifyOptions& opt) {
    SuiteResult r{"dcv"};
    detail::Sweep sweep;
    std::uint64_t extra = opt.max_n >= 3 ? std::min<std::uint64_t>(opt.samples, 1000) : 0;
    detail::sweep_attachment_triples(
        sweep, std::min(opt.max_n, 2), extra, 3, opt.seed,
        [lim = opt.limits](const Graph& h, VertexSet u, VertexSet v, VertexSet w) -> std::string {
            return check_delcont_var(h, u, v, w, lim) ? "" : "del-cont variant violated";
        });
    sweep.run_into(r, opt.threads);
    return r;
}

// Chmutov-Varchenko axiom bundle at 3/8: normalization, multiplicativity over
// all splits n1 + n2 <= max_n, leaf deletion with factor exactly -1/8, and
// both 6T relations over hosts with <= 3 vertices.
inline SuiteResult suite_cv(const VerifyOptions& opt) {
    SuiteResult r{"cv"};
    detail::Sweep sweep;
    sweep.add("normalization N1", [lim = opt.limits]() -> std::string {
        Dyadic got = phi_eulerian(Graph(1), lim);
        return got == Dyadic(3, -3) ? "" : "phi(N1) = " + detail::dy(got);
    });
    for (int n1 = 0; n1 <= opt.max_n; ++n1)
        for (int n2 = n1; n1 + n2 <= opt.max_n; ++n2)
            for (const Graph& g1 : enumerate_graphs(n1))
                for (const Graph& g2 : enumerate_graphs(n2))
                    sweep.add("mult " + to_graph6(g1) + " x " + to_graph6(g2),
                              [g1, g2, lim = opt.limits]() -> std::string {
                                  Dyadic lhs = phi_eulerian(disjoint_union(g1, g2), lim);
                                  Dyadic rhs = phi_eulerian(g1, lim) * phi_eulerian(g2, lim);
                                  return lhs == rhs ? "" : detail::dy(lhs) + " != " + detail::dy(rhs);
                              });
    for (int n = 1; n <= opt.max_n; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) != 1) continue;
                sweep.add("leaf " + to_graph6(g) + " v=" + std::to_string(v),
                          [g, v, lim = opt.limits]() -> std::string {
                              Dyadic lhs = phi_eulerian(g, lim);
                              Dyadic rhs = Dyadic(-1, -3) * phi_eulerian(remove_vertex(g, v), lim);
                              return lhs == rhs ? "" : detail::dy(lhs) + " != " + detail::dy(rhs);
                          });
            }
    detail::sweep_attachment_triples(
        sweep, std::min(opt.max_n, 3), 0, 0, opt.seed,
        [lim = opt.limits](const Graph& h, VertexSet x, VertexSet y, VertexSet z) -> std::string {
            if (!check_6t(h, x, y, z, 1, lim)) return "6T variant 1 violated";
            if (!check_6t(h, x, y, z, 2, lim)) return "6T variant 2 violated";
            return "";
        });
    sweep.run_into(r, opt.threads);
    return r;
}

// Extremal bound 0 < |phi| <= (3/8)^n, with equality exactly on the edgeless
// graph of each order.
inline SuiteResult suite_bound(const VerifyOptions& opt) {
    SuiteResult r{"bound"};
    detail::Sweep sweep;
    for (int n = 0; n <= opt.max_n; ++n)
        for (const Graph& g : enumerate_graphs(n))
            sweep.add(to_graph6(g), [g, lim = opt.limits]() -> std::string {
                BoundReport b = check_bound(g, lim);
                if (!b.nonzero) return "phi vanished";
                if (!b.within) return "|phi| = " + detail::dy(b.value) + " exceeds " + detail::dy(b.bound);
                bool edgeless = g.edge_count() == 0;
                if (b.equality != edgeless)
                    return edgeless ? "edgeless graph off the bound" : "bound attained with edges";
                return "";
            });
    sweep.run_into(r, opt.threads);
    return r;
}

// phi(intersection graph) == weight-system value, every diagram up to
// max_chords chords (exhaustive up to rotation).
inline SuiteResult suite_bridge(const VerifyOptions& opt) {
    SuiteResult r{"bridge"};
    detail::Sweep sweep;
    for (int n = 0; n <= opt.max_chords; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            sweep.add(to_word(d), [d, lim = opt.limits]() -> std::string {
                Dyadic lhs = phi_eulerian(intersection_graph(d), lim);
                Dyadic rhs = w_at_c38(d);
                return lhs == rhs ? "" : detail::dy(lhs) + " != " + detail::dy(rhs);
            });
    sweep.run_into(r, opt.threads);
    return r;
}

// phi vs psi over every class with n <= max_n. A discrepancy would be a
// finding, not an error: the suite never fails the exit code.
inline SuiteResult suite_conjecture(const VerifyOptions& opt) {
    SuiteResult r{"conjecture"};
    r.report_only = true;
    detail::Sweep sweep;
    for (int n = 0; n <= opt.max_n; ++n)
        for (const Graph& g : enumerate_graphs(n))
            sweep.add(to_graph6(g), [g, lim = opt.limits]() -> std::string {
                Dyadic p = phi_eulerian(g, lim);
                Dyadic q = psi(g, lim);
                return p == q ? "" : "phi = " + detail::dy(p) + ", psi = " + detail::dy(q);
            });
    sweep.run_into(r, opt.threads);
    return r;
}

inline SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "delcont")
        r = suite_delcont(opt);
    else if (name == "fourT")
        r = suite_fourT(opt);
    else if (name == "sixT")
        r = suite_sixT(opt);
    else if (name == "triangle")
        r = suite_triangle(opt);
    else if (name == "dcv")
        r = suite_dcv(opt);
    else if (name == "cv")
        r = suite_cv(opt);
    else if (name == "bound")
        r = suite_bound(opt);
    else if (name == "bridge")
        r = suite_bridge(opt);
    else if (name == "conjecture")
        r = suite_conjecture(opt);
    else
        throw std::invalid_argument("unknown suite: " + name);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
    std::vector<SuiteResult> out;
    if (suite == "all")
        for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
    else
        out.push_back(run_suite(suite, opt));
    return out;
}

}  // namespace phi

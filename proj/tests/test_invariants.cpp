#include <random>
#include <thread>

#include <catch2/catch_amalgamated.hpp>

#include "phi/enumerate.hpp"
#include "phi/invariants.hpp"
#include "test_util.hpp"

using namespace phi;
using namespace testutil;

namespace {

const Dyadic kThreeEighths(3, -3);

std::vector<Dyadic> all_four(const Graph& g) {
    return {phi_direct(g), phi_eulerian(g), phi_components(g), phi_delcont(g)};
}

}  // namespace

TEST_CASE("value table on small graphs", "[invariants]") {
    SECTION("discrete graphs: (3/8)^n for every evaluator") {
        for (int n = 0; n <= 5; ++n) {
            Dyadic expected = pow(kThreeEighths, n);
            for (const Dyadic& got : all_four(Graph(n))) REQUIRE(got == expected);
        }
    }
    SECTION("K2, P3, K3") {
        for (const Dyadic& got : all_four(complete(2))) REQUIRE(got == Dyadic(-3, -6));
        for (const Dyadic& got : all_four(path(3))) REQUIRE(got == Dyadic(3, -9));
        for (const Dyadic& got : all_four(complete(3))) REQUIRE(got == Dyadic(15, -9));
    }
}

TEST_CASE("evaluator-specific spot values", "[invariants]") {
    // K2 subset sum by hand: U = {}, {u}, {v}, {u,v} contribute 1, -2, -2, 0
    CHECK(phi_eulerian(complete(2)) == Dyadic(-3, -6));
    // K2 component sum by hand: (-1/64)(9 - 6)
    CHECK(phi_components(complete(2)) == Dyadic(-3, -6));
    CHECK(phi_components(Graph(0)) == Dyadic(1));
    CHECK(phi_direct(Graph(0)) == Dyadic(1));
    // K3 recursion: -phi(P3) + 1/4 phi(N2) = -3/512 + 18/512
    CHECK(phi_delcont(complete(3)) == Dyadic(-3, -9) + Dyadic(1, -2) * Dyadic(9, -6));
    // three leaf strips then one isolated vertex
    CHECK(phi_delcont(star(3)) == pow(Dyadic(-1, -3), 3) * kThreeEighths);
    CHECK(phi_delcont(cycle(4)) == phi_eulerian(cycle(4)));
}

TEST_CASE("four-way agreement, exhaustive n <= 5", "[invariants]") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            auto values = all_four(g);
            for (const Dyadic& v : values) REQUIRE(v == values[0]);
        }
}

TEST_CASE("multiplicativity over disjoint unions", "[invariants]") {
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = n1; n1 + n2 <= 6; ++n2)
            for (const Graph& a : enumerate_graphs(n1))
                for (const Graph& b : enumerate_graphs(n2))
                    REQUIRE(phi_eulerian(disjoint_union(a, b)) ==
                            phi_eulerian(a) * phi_eulerian(b));
}

TEST_CASE("leaf deletion factor is exactly -1/8", "[invariants]") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n))
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 1)
                    REQUIRE(phi_eulerian(g) == Dyadic(-1, -3) * phi_eulerian(remove_vertex(g, v)));
}

TEST_CASE("isomorphism invariance of phi and psi", "[invariants][prop]") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.set_edge(u, v);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabeled(g, perm);
        REQUIRE(phi_eulerian(g) == phi_eulerian(h));
        REQUIRE(psi(g) == psi(h));
    }
}

TEST_CASE("psi values", "[invariants][psi]") {
    CHECK(psi(Graph(1)) == kThreeEighths);         // (1/4)(-1/2 + 2)
    CHECK(psi(complete(2)) == Dyadic(-3, -6));     // (1/16)(1/4 - 1 - 1 + 1)
    for (int n = 0; n <= 4; ++n) REQUIRE(psi(Graph(n)) == pow(kThreeEighths, n));
    CHECK(psi(path(3)) == Dyadic(3, -9));
    CHECK(psi(complete(3)) == Dyadic(15, -9));
}

TEST_CASE("extremal bound checker", "[invariants][bound]") {
    SECTION("equality on discrete graphs") {
        for (int n = 0; n <= 5; ++n) {
            BoundReport r = check_bound(Graph(n));
            CHECK(r.nonzero);
            CHECK(r.within);
            CHECK(r.equality);
        }
    }
    SECTION("K2 sits strictly inside") {
        BoundReport r = check_bound(complete(2));
        CHECK(r.nonzero);
        CHECK(r.within);
        CHECK_FALSE(r.equality);
    }
    SECTION("no violations over all classes n <= 5") {
        for (int n = 0; n <= 5; ++n)
            for (const Graph& g : enumerate_graphs(n)) {
                BoundReport r = check_bound(g);
                REQUIRE(r.nonzero);
                REQUIRE(r.within);
                REQUIRE(r.equality == (g.edge_count() == 0));
            }
    }
}

TEST_CASE("size guards raise structured errors", "[invariants][guard]") {
    Graph big(22);  // 21-edge path exceeds the 2^|E| evaluators' default guard
    for (int i = 0; i + 1 < big.n; ++i) big.set_edge(i, i + 1);
    CHECK_THROWS_AS(phi_direct(big), GuardError);
    CHECK_THROWS_AS(phi_components(big), GuardError);
    CHECK_THROWS_AS(phi_eulerian(Graph(25)), GuardError);
    CHECK_THROWS_AS(psi(Graph(25)), GuardError);
    try {
        phi_direct(big);
        FAIL("expected GuardError");
    } catch (const GuardError& e) {
        CHECK(e.op == "phi_direct");
        CHECK(e.limit == 20);
        CHECK(e.actual == 21);
    }
    SECTION("delcont node budget") {
        EvalLimits lim;
        lim.delcont_max_nodes = 1;
        CHECK_THROWS_AS(phi_delcont(complete(6), lim), GuardError);
    }
    SECTION("limits are configurable") {
        EvalLimits lim;
        lim.direct_max_edges = 21;
        CHECK(phi_direct(big, lim) == phi_eulerian(big));
    }
}

TEST_CASE("evaluation cache", "[invariants][cache]") {
    EvalCache cache;
    Dyadic first = phi_delcont(complete(5), cache);
    std::size_t filled = cache.size();
    CHECK(filled > 0);
    CHECK(phi_delcont(complete(5), cache) == first);
    CHECK(cache.size() == filled);  // second run is pure lookup

    SECTION("shared across threads") {
        EvalCache shared;
        std::vector<std::thread> pool;
        std::vector<Dyadic> results(4);
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&shared, &results, t] {
                results[t] = phi_delcont(complete(6), shared);
            });
        for (auto& th : pool) th.join();
        for (const Dyadic& r : results) REQUIRE(r == phi_eulerian(complete(6)));
    }
}

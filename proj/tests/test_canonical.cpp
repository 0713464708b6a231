#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "phi/canonical.hpp"
#include "phi/enumerate.hpp"
#include "test_util.hpp"

using namespace phi;
using namespace testutil;

TEST_CASE("canonical form basics", "[canonical]") {
    SECTION("both labelings of P3 coincide") {
        Graph a(3), b(3);
        a.set_edge(0, 1);
        a.set_edge(1, 2);
        b.set_edge(0, 2);
        b.set_edge(2, 1);
        CHECK(canonical_form(a) == canonical_form(b));
    }
    SECTION("idempotent") {
        for (const Graph& g : enumerate_graphs(5))
            REQUIRE(canonical_form(canonical_form(g)) == canonical_form(g));
    }
    SECTION("any labeling of a triangle") {
        std::mt19937_64 rng(5);
        std::vector<int> perm{0, 1, 2};
        for (int t = 0; t < 6; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(relabeled(complete(3), perm)) == canonical_form(complete(3)));
        }
    }
}

TEST_CASE("canonical form is a full isomorphism invariant", "[canonical]") {
    std::mt19937_64 rng(17);
    SECTION("random relabelings collapse to one key, n <= 6") {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : enumerate_graphs(n)) {
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 0);
                for (int t = 0; t < 3; ++t) {
                    std::shuffle(perm.begin(), perm.end(), rng);
                    REQUIRE(canonical_key(relabeled(g, perm)) == canonical_key(g));
                }
                REQUIRE(isomorphic_bruteforce(canonical_form(g), g));
            }
    }
    SECTION("distinct classes are non-isomorphic, exhaustive n <= 5") {
        for (int n = 2; n <= 5; ++n) {
            const auto& classes = enumerate_graphs(n);
            for (std::size_t i = 0; i < classes.size(); ++i)
                for (std::size_t j = i + 1; j < classes.size(); ++j)
                    REQUIRE_FALSE(isomorphic_bruteforce(classes[i], classes[j]));
        }
    }
    SECTION("random relabelings collapse to one key, random graphs n = 7, 8") {
        for (int trial = 0; trial < 200; ++trial) {
            int n = 7 + static_cast<int>(rng() % 2);
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() & 1) g.set_edge(u, v);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(canonical_key(relabeled(g, perm)) == canonical_key(g));
        }
    }
    SECTION("sampled distinct classes at n = 6") {
        const auto& classes = enumerate_graphs(6);
        std::mt19937_64 pick(23);
        for (int t = 0; t < 500; ++t) {
            std::size_t i = pick() % classes.size();
            std::size_t j = pick() % classes.size();
            if (i == j) continue;
            REQUIRE_FALSE(isomorphic_bruteforce(classes[i], classes[j]));
        }
    }
}

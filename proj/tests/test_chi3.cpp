#include <catch2/catch_amalgamated.hpp>

#include "phi/chi3.hpp"
#include "phi/enumerate.hpp"
#include "test_util.hpp"

using namespace phi;
using namespace testutil;

namespace {

// Independent oracle: chi3(G) = sum over edge subsets of (-1)^|E'| 3^{c(G|_E')}.
std::int64_t chi3_inclusion_exclusion(const Graph& g) {
    auto edges = edge_list(g);
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
        Graph s(g.n);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (mask >> i & 1u) s.set_edge(edges[i].first, edges[i].second);
        std::int64_t pw = 1;
        for (int c = 0; c < component_count(s); ++c) pw *= 3;
        total += (std::popcount(mask) & 1) ? -pw : pw;
    }
    return total;
}

}  // namespace

TEST_CASE("chi3 on known graphs", "[chi3]") {
    CHECK(chi3(Graph(1)) == 3);
    CHECK(chi3(Graph(0)) == 1);
    CHECK(chi3(complete(3)) == 6);
    CHECK(chi3(complete(4)) == 0);
    CHECK(chi3(path(3)) == 12);
    CHECK(chi3(cycle(4)) == 18);   // 2^4 + 2
    CHECK(chi3(cycle(5)) == 30);   // 2^5 - 2
    CHECK(chi3(star(4)) == 48);    // 3 * 2^4
    CHECK(chi3(disjoint_union(complete(3), complete(3))) == 36);
}

TEST_CASE("chi3 agrees with the inclusion-exclusion formula, n <= 5", "[chi3]") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) REQUIRE(chi3(g) == chi3_inclusion_exclusion(g));
}

TEST_CASE("chi3 handles deep strip chains", "[chi3]") {
    // long path: 3 * 2^(n-1)
    CHECK(chi3(path(20)) == std::int64_t{3} << 19);
    // cycle glued to a tail
    Graph g = cycle(6);
    g = add_vertex(g, vbit(0));
    g = add_vertex(g, vbit(6));
    CHECK(chi3(g) == chi3_inclusion_exclusion(g));
}

#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "phi/enumerate.hpp"

using namespace phi;

TEST_CASE("isomorphism class counts", "[enumerate]") {
    const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) REQUIRE(enumerate_graphs(n).size() == std::size_t(expected[n]));
}

TEST_CASE("edge-mask and augmentation strategies agree", "[enumerate]") {
    for (int n = 0; n <= 6; ++n) {
        auto by_mask = enumerate_graphs_uncached(n, EnumStrategy::EdgeMasks);
        auto by_aug = enumerate_graphs_uncached(n, EnumStrategy::Augment);
        std::set<std::string> a, b;
        for (const Graph& g : by_mask) a.insert(to_graph6(g));
        for (const Graph& g : by_aug) b.insert(to_graph6(g));
        REQUIRE(a == b);
    }
}

TEST_CASE("edge-mask strategy at n = 7 matches the class count", "[enumerate][heavy]") {
    REQUIRE(enumerate_graphs_uncached(7, EnumStrategy::EdgeMasks).size() == 1044);
}

TEST_CASE("enumeration guards", "[enumerate]") {
    CHECK_THROWS_AS(enumerate_graphs_uncached(8, EnumStrategy::EdgeMasks), GuardError);
    CHECK_THROWS_AS(enumerate_graphs_uncached(9, EnumStrategy::Augment), GuardError);
}

TEST_CASE("graph6 stream as an alternative input path", "[enumerate]") {
    std::stringstream ss;
    for (const Graph& g : enumerate_graphs(5)) ss << to_graph6(g) << "\n";
    auto back = read_graph6_stream(ss);
    REQUIRE(back.size() == enumerate_graphs(5).size());
    for (std::size_t i = 0; i < back.size(); ++i) REQUIRE(back[i] == enumerate_graphs(5)[i]);
}

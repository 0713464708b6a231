#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "phi/canonical.hpp"
#include "phi/chords.hpp"
#include "phi/invariants.hpp"
#include "test_util.hpp"

using namespace phi;
using namespace testutil;

namespace {

ChordDiagram mirror(const ChordDiagram& d) {
    int m = 2 * d.order;
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[m - 1 - i] = m - 1 - d.pairing[i];
    return ChordDiagram(std::move(p));
}

}  // namespace

TEST_CASE("chord word round trip", "[chords]") {
    for (const char* w : {"aa", "abab", "aabb", "abcabc", "abcadbcd"}) {
        ChordDiagram d = diagram_from_word(w);
        REQUIRE(to_word(d) == w);
    }
    CHECK(to_word(ChordDiagram(std::vector<int>{})) == "-");
    CHECK(diagram_from_word("-").order == 0);
    CHECK_THROWS_AS(diagram_from_word("aba"), FormatError);
    CHECK_THROWS_AS(diagram_from_word("aaaa"), FormatError);
    CHECK_THROWS_AS(diagram_from_word("abac"), FormatError);
}

TEST_CASE("canonical rotation", "[chords]") {
    ChordDiagram d = diagram_from_word("abab");
    CHECK(canonical_rotation(d) == d);  // already minimal
    for (int r = 0; r < 4; ++r) REQUIRE(canonical_rotation(rotated(d, r)) == canonical_rotation(d));
    SECTION("all rotations of every diagram collapse") {
        for (const ChordDiagram& c : enumerate_diagrams(4))
            for (int r = 0; r < 8; ++r)
                REQUIRE(canonical_rotation(rotated(c, r)) == canonical_rotation(c));
    }
    SECTION("reflections are not quotiented") {
        bool found_chiral = false;
        for (int n = 3; n <= 5 && !found_chiral; ++n)
            for (const ChordDiagram& c : enumerate_diagrams(n))
                if (!(canonical_rotation(mirror(c)) == canonical_rotation(c))) {
                    found_chiral = true;
                    break;
                }
        CHECK(found_chiral);
    }
}

TEST_CASE("diagram enumeration", "[chords]") {
    const std::size_t expected[] = {1, 1, 2, 5, 18, 105};
    for (int n = 0; n <= 5; ++n) REQUIRE(enumerate_diagrams(n).size() == expected[n]);
    CHECK_THROWS_AS(enumerate_diagrams(7), GuardError);

    SECTION("rotation orbits partition all pairings") {
        // sum of orbit sizes recovers (2n-1)!!
        for (int n = 1; n <= 5; ++n) {
            std::int64_t expected_pairings = 1;
            for (int k = 3; k <= 2 * n - 1; k += 2) expected_pairings *= k;
            std::int64_t total = 0;
            for (const ChordDiagram& d : enumerate_diagrams(n)) {
                std::set<std::vector<int>> orbit;
                for (int r = 0; r < 2 * n; ++r) orbit.insert(rotated(d, r).pairing);
                total += static_cast<std::int64_t>(orbit.size());
            }
            REQUIRE(total == expected_pairings);
        }
    }
}

TEST_CASE("intersection graphs", "[chords]") {
    CHECK(intersection_graph(diagram_from_word("aa")) == Graph(1));
    CHECK(intersection_graph(diagram_from_word("abab")) == complete(2));
    CHECK(intersection_graph(diagram_from_word("aabb")) == Graph(2));
    // four chords pairwise crossing except one pair: the diamond
    Graph ig = intersection_graph(diagram_from_word("abcadbcd"));
    CHECK(canonical_key(ig) == canonical_key(diamond()));
}

TEST_CASE("the 2-dimensional representation basis", "[chords][rep2]") {
    CHECK(Rep2Basis::casimir_ok());
}

TEST_CASE("trace oracle values", "[chords][oracle]") {
    CHECK(sl2_trace_oracle(diagram_from_word("aa")) == Dyadic(3, -2));     // 3/4
    CHECK(sl2_trace_oracle(diagram_from_word("abab")) == Dyadic(-3, -5));  // -3/32
    CHECK(sl2_trace_oracle(diagram_from_word("aabb")) == Dyadic(9, -5));   // 9/32
    CHECK(w_at_c38(diagram_from_word("aa")) == Dyadic(3, -3));
    CHECK(w_at_c38(diagram_from_word("abab")) == Dyadic(-3, -6));
    CHECK(w_at_c38(diagram_from_word("aabb")) == Dyadic(9, -6));
    CHECK(w_at_c38(ChordDiagram(std::vector<int>{})) == Dyadic(1));
    CHECK_THROWS_AS(sl2_trace_oracle(product(diagram_from_word("abcdeabcde"),
                                             diagram_from_word("abcdabcd"))),
                    GuardError);
}

TEST_CASE("diagram product", "[chords][product]") {
    ChordDiagram d = diagram_from_word("abab");
    CHECK(product(d, ChordDiagram(std::vector<int>{})) == d);
    CHECK(intersection_graph(product(diagram_from_word("aa"), diagram_from_word("aa"))) == Graph(2));

    SECTION("multiplicativity of the weight value") {
        for (int n1 = 1; n1 <= 3; ++n1)
            for (int n2 = 1; n1 + n2 <= 6; ++n2)
                for (const ChordDiagram& a : enumerate_diagrams(n1))
                    for (const ChordDiagram& b : enumerate_diagrams(n2))
                        REQUIRE(w_at_c38(product(a, b)) == w_at_c38(a) * w_at_c38(b));
    }
    SECTION("independence of the break point") {
        for (const ChordDiagram& a : enumerate_diagrams(3))
            for (const ChordDiagram& b : enumerate_diagrams(2)) {
                Dyadic reference = w_at_c38(product(a, b));
                for (int i = 0; i < 2 * a.order; ++i)
                    for (int j = 0; j < 2 * b.order; ++j)
                        REQUIRE(w_at_c38(product(rotated(a, i), rotated(b, j))) == reference);
            }
    }
}

TEST_CASE("leaf deletion on diagrams", "[chords]") {
    // a leaf chord crosses exactly one other chord; removing it scales by -1/8
    int checked = 0;
    for (int n = 2; n <= 5; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            Graph ig = intersection_graph(d);
            for (int c = 0; c < n; ++c)
                if (ig.degree(c) == 1) {
                    REQUIRE(w_at_c38(d) == Dyadic(-1, -3) * w_at_c38(remove_chord(d, c)));
                    ++checked;
                }
        }
    CHECK(checked > 50);
}

TEST_CASE("chord 4T quadruples", "[chords][fourT]") {
    SECTION("rejections") {
        ChordDiagram d = diagram_from_word("aabb");
        CHECK_THROWS_AS(generate_chord_4t(d, 0, 2), std::invalid_argument);  // point 2 is chord b
        CHECK_THROWS_AS(generate_chord_4t(d, 0, 0), std::invalid_argument);  // next point is own partner
        CHECK_THROWS_AS(generate_chord_4t(d, 0, 9), std::invalid_argument);
    }
    SECTION("signed oracle sum vanishes, all diagrams n <= 4") {
        int quadruples = 0;
        for (int n = 2; n <= 4; ++n)
            for (const ChordDiagram& d : enumerate_diagrams(n)) {
                auto labels = chord_labels(d);
                for (int p = 0; p < 2 * n; ++p) {
                    if (labels[(p + 1) % (2 * n)] == labels[p]) continue;
                    auto quad = generate_chord_4t(d, labels[p], p);
                    Dyadic total;
                    for (const auto& [sign, diag] : quad)
                        total += Dyadic(sign) * w_at_c38(diag);
                    REQUIRE(total.is_zero());
                    ++quadruples;
                }
            }
        CHECK(quadruples > 100);
    }
    SECTION("the input diagram appears with sign -1 at slot 'before s'") {
        ChordDiagram d = diagram_from_word("abab");
        auto quad = generate_chord_4t(d, 0, 0);
        CHECK(quad[1].sign == -1);
        CHECK(canonical_rotation(quad[1].diagram) == canonical_rotation(d));
    }
}

TEST_CASE("intersection-graph determination of the weight value", "[chords]") {
    // diagrams sharing an intersection graph share the oracle value
    for (int n = 1; n <= 6; ++n) {
        std::map<std::string, Dyadic> value_by_graph;
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            std::string key = canonical_key(intersection_graph(d));
            Dyadic w = w_at_c38(d);
            auto [it, inserted] = value_by_graph.emplace(key, w);
            if (!inserted) REQUIRE(it->second == w);
        }
    }
}

TEST_CASE("bridge between graphs and diagrams, n <= 4", "[chords][bridge]") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            REQUIRE(phi_eulerian(intersection_graph(d)) == w_at_c38(d));
}

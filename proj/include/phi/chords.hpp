#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "phi/dyadic.hpp"
#include "phi/graph.hpp"
#include "phi/guard.hpp"

namespace phi {

// Chord diagram of order n: 2n points in circular order with a perfect
// pairing; pairing[i] is the partner of point i. Considered up to rotation
// (orientation-preserving circle symmetry); reflections are NOT quotiented.
struct ChordDiagram {
    int order = 0;
    std::vector<int> pairing;

    ChordDiagram() = default;
    explicit ChordDiagram(std::vector<int> p) : pairing(std::move(p)) {
        if (pairing.size() % 2) throw FormatError("ChordDiagram: odd number of points");
        order = static_cast<int>(pairing.size()) / 2;
        for (int i = 0; i < 2 * order; ++i) {
            int j = pairing[i];
            if (j < 0 || j >= 2 * order || j == i || pairing[j] != i)
                throw FormatError("ChordDiagram: pairing is not a fixed-point-free involution");
        }
    }

    friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
        return a.pairing == b.pairing;
    }
};

// Chords numbered by first occurrence around the circle; -1 padded result has
// size 2n, chord_of[p] = index of the chord through point p.
inline std::vector<int> chord_labels(const ChordDiagram& d) {
    std::vector<int> label(2 * d.order, -1);
    int next = 0;
    for (int p = 0; p < 2 * d.order; ++p)
        if (label[p] < 0) {
            label[p] = label[d.pairing[p]] = next++;
        }
    return label;
}

// Double-occurrence word with letters assigned by first occurrence ("abab").
inline std::string to_word(const ChordDiagram& d) {
    if (d.order == 0) return "-";
    auto label = chord_labels(d);
    std::string w(2 * d.order, '?');
    for (int p = 0; p < 2 * d.order; ++p) w[p] = static_cast<char>('a' + label[p]);
    return w;
}

inline ChordDiagram diagram_from_word(std::string_view w) {
    if (w == "-" || w.empty()) return ChordDiagram(std::vector<int>{});
    if (w.size() % 2) throw FormatError("chord word: odd length");
    std::vector<int> first(256, -1);
    std::vector<int> pairing(w.size(), -1);
    for (std::size_t p = 0; p < w.size(); ++p) {
        unsigned char c = static_cast<unsigned char>(w[p]);
        if (first[c] < 0) {
            first[c] = static_cast<int>(p);
        } else if (pairing[first[c]] >= 0) {
            throw FormatError("chord word: letter appears more than twice");
        } else {
            pairing[first[c]] = static_cast<int>(p);
            pairing[p] = first[c];
        }
    }
    for (int v : pairing)
        if (v < 0) throw FormatError("chord word: letter appears only once");
    return ChordDiagram(std::move(pairing));
}

inline ChordDiagram rotated(const ChordDiagram& d, int shift) {
    int m = 2 * d.order;
    if (m == 0) return d;
    shift = ((shift % m) + m) % m;
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[(i + shift) % m] = (d.pairing[i] + shift) % m;
    return ChordDiagram(std::move(p));
}

// Lexicographically minimal first-occurrence word over all 2n rotations.
inline ChordDiagram canonical_rotation(const ChordDiagram& d) {
    int m = 2 * d.order;
    if (m == 0) return d;
    int best = 0;
    std::string best_word = to_word(d);
    for (int r = 1; r < m; ++r) {
        std::string w = to_word(rotated(d, r));
        if (w < best_word) {
            best_word = w;
            best = r;
        }
    }
    return rotated(d, best);
}

// Vertices = chords (in first-occurrence order); edge iff endpoints interlace.
inline Graph intersection_graph(const ChordDiagram& d) {
    if (d.order > kMaxVertices) throw GuardError("intersection_graph", kMaxVertices, d.order);
    auto label = chord_labels(d);
    std::vector<std::pair<int, int>> ends(d.order, {-1, -1});
    for (int p = 0; p < 2 * d.order; ++p) {
        auto& e = ends[label[p]];
        (e.first < 0 ? e.first : e.second) = p;
    }
    Graph g(d.order);
    for (int a = 0; a < d.order; ++a)
        for (int b = a + 1; b < d.order; ++b) {
            bool in1 = ends[a].first < ends[b].first && ends[b].first < ends[a].second;
            bool in2 = ends[a].first < ends[b].second && ends[b].second < ends[a].second;
            if (in1 != in2) g.set_edge(a, b);
        }
    return g;
}

// Glue the two circles, broken after the last point of each diagram.
inline ChordDiagram product(const ChordDiagram& a, const ChordDiagram& b) {
    std::vector<int> p;
    p.reserve(2 * (a.order + b.order));
    for (int v : a.pairing) p.push_back(v);
    for (int v : b.pairing) p.push_back(v + 2 * a.order);
    return ChordDiagram(std::move(p));
}

// One representative per rotation class, generated from all (2n-1)!! pairings.
inline std::vector<ChordDiagram> enumerate_diagrams(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_diagrams: negative order");
    if (n > 6) throw GuardError("enumerate_diagrams", 6, n);
    std::vector<ChordDiagram> out;
    std::unordered_set<std::string> seen;
    std::vector<int> pairing(2 * n, -1);
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == 2 * n) {
            ChordDiagram c = canonical_rotation(ChordDiagram(pairing));
            if (seen.insert(to_word(c)).second) out.push_back(c);
            return;
        }
        int i = 0;
        while (pairing[i] >= 0) ++i;
        for (int j = i + 1; j < 2 * n; ++j) {
            if (pairing[j] >= 0) continue;
            pairing[i] = j;
            pairing[j] = i;
            self(self, placed + 2);
            pairing[i] = pairing[j] = -1;
        }
    };
    if (n == 0)
        out.push_back(ChordDiagram(std::vector<int>{}));
    else
        rec(rec, 0);
    return out;
}

// ---- the sl(2) trace oracle in the 2-dimensional representation ----

using Mat2 = std::array<std::int64_t, 4>;  // row-major 2x2

inline Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}
inline std::int64_t mat_trace(const Mat2& a) { return a[0] + a[3]; }

// Basis E, F, H of sl(2) with the Killing-form dual pairing: a chord carries
// (X, X') in {(E,F), (F,E), (H,H)} with weights 1/4, 1/4, 1/8. The weighted
// sum of X X' is the Casimir, 3/8 times the identity.
struct Rep2Basis {
    static constexpr Mat2 kE{0, 1, 0, 0};
    static constexpr Mat2 kF{0, 0, 1, 0};
    static constexpr Mat2 kH{1, 0, 0, -1};
    static constexpr Mat2 kI{1, 0, 0, 1};

    static constexpr std::array<Mat2, 3> first{kE, kF, kH};
    static constexpr std::array<Mat2, 3> second{kF, kE, kH};
    static constexpr std::array<int, 3> weight_log2{2, 2, 3};  // weights 2^-2, 2^-2, 2^-3

    // 2(EF + FE) + H^2 == 3 I, i.e. the weighted pairing sums to (3/8) I.
    static bool casimir_ok() {
        Mat2 s{};
        for (int t = 0; t < 3; ++t) {
            Mat2 p = mat_mul(first[t], second[t]);
            int scale = 1 << (3 - weight_log2[t]);
            for (int i = 0; i < 4; ++i) s[i] += scale * p[i];
        }
        return s == Mat2{3, 0, 0, 3};
    }
};

struct ChordLimits {
    int oracle_max_chords = 8;  // 3^n assignments, 2n matrix products each
};

inline constexpr ChordLimits kDefaultChordLimits{};

// Sum over basis assignments of (product of pairing weights) times the trace
// of the 2x2 product around the circle, X at the first endpoint of each chord
// and its dual partner at the second.
inline Dyadic sl2_trace_oracle(const ChordDiagram& d,
                               const ChordLimits& lim = kDefaultChordLimits) {
    int n = d.order;
    if (lim.oracle_max_chords && n > lim.oracle_max_chords)
        throw GuardError("sl2_trace_oracle", lim.oracle_max_chords, n);
    if (n == 0) return Dyadic(2);  // empty product is the identity, trace 2
    auto label = chord_labels(d);
    std::vector<bool> is_first(2 * n, false);
    {
        std::vector<bool> seen(n, false);
        for (int p = 0; p < 2 * n; ++p) {
            if (!seen[label[p]]) {
                is_first[p] = true;
                seen[label[p]] = true;
            }
        }
    }
    std::vector<int> assign(n, 0);
    std::int64_t acc = 0;  // common denominator 2^{3n}
    for (;;) {
        Mat2 prod = Rep2Basis::kI;
        int wlog = 0;
        for (int c = 0; c < n; ++c) wlog += Rep2Basis::weight_log2[assign[c]];
        for (int p = 0; p < 2 * n; ++p) {
            const Mat2& x = is_first[p] ? Rep2Basis::first[assign[label[p]]]
                                        : Rep2Basis::second[assign[label[p]]];
            prod = mat_mul(prod, x);
        }
        acc += mat_trace(prod) << (3 * n - wlog);
        int c = 0;
        while (c < n && assign[c] == 2) assign[c++] = 0;
        if (c == n) break;
        ++assign[c];
    }
    return Dyadic(BigInt(acc), -3 * n);
}

// The weight-system value at c = 3/8: on the 2-dimensional irreducible
// representation the diagram acts by a scalar, so it is half the trace.
inline Dyadic w_at_c38(const ChordDiagram& d, const ChordLimits& lim = kDefaultChordLimits) {
    return sl2_trace_oracle(d, lim).scaled_pow2(-1);
}

inline ChordDiagram remove_chord(const ChordDiagram& d, int chord) {
    if (chord < 0 || chord >= d.order) throw std::invalid_argument("remove_chord: bad index");
    auto label = chord_labels(d);
    std::vector<int> keep;
    for (int p = 0; p < 2 * d.order; ++p)
        if (label[p] != chord) keep.push_back(p);
    std::vector<int> newpos(2 * d.order, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) newpos[keep[i]] = static_cast<int>(i);
    std::vector<int> pairing(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) pairing[i] = newpos[d.pairing[keep[i]]];
    return ChordDiagram(std::move(pairing));
}

struct SignedDiagram {
    int sign;
    ChordDiagram diagram;
};

// The four diagrams of a 4T relation: the endpoint of `chord` sitting at
// circle position `endpoint` slides past the two endpoints of the chord
// occupying the next position counterclockwise. The signed sum of any weight
// system over the quadruple vanishes. Signs come out (+, -, +, -) for
// (after s, before s, after s-bar, before s-bar); "before s" is the input.
inline std::array<SignedDiagram, 4> generate_chord_4t(const ChordDiagram& d, int chord,
                                                      int endpoint) {
    int m = 2 * d.order;
    if (endpoint < 0 || endpoint >= m) throw std::invalid_argument("generate_chord_4t: bad position");
    auto label = chord_labels(d);
    if (chord < 0 || chord >= d.order || label[endpoint] != chord)
        throw std::invalid_argument("generate_chord_4t: position is not an endpoint of that chord");
    int next = (endpoint + 1) % m;
    if (label[next] == chord)
        throw std::invalid_argument("generate_chord_4t: cannot slide past the chord's own endpoint");

    int partner = d.pairing[endpoint];
    int s = next;
    int sbar = d.pairing[next];
    // circle with the moving endpoint removed, original labels kept
    std::vector<int> reduced;
    reduced.reserve(m - 1);
    for (int p = 0; p < m; ++p)
        if (p != endpoint) reduced.push_back(p);

    auto build = [&](int target, bool after) {
        std::vector<int> seq = reduced;
        auto it = std::find(seq.begin(), seq.end(), target);
        seq.insert(after ? it + 1 : it, endpoint);
        std::vector<int> newpos(m, -1);
        for (int i = 0; i < m; ++i) newpos[seq[i]] = i;
        std::vector<int> pairing(m);
        for (int i = 0; i < m; ++i) {
            int old = seq[i];
            int oldpartner = old == endpoint ? partner : d.pairing[old];
            pairing[i] = newpos[oldpartner];
        }
        return ChordDiagram(std::move(pairing));
    };

    return {SignedDiagram{+1, build(s, true)}, SignedDiagram{-1, build(s, false)},
            SignedDiagram{+1, build(sbar, true)}, SignedDiagram{-1, build(sbar, false)}};
}

}  // namespace phi

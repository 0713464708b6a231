#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "phi/canonical.hpp"
#include "phi/dyadic.hpp"
#include "phi/graph.hpp"
#include "phi/invariants.hpp"

namespace phi {

// Integer/dyadic-weighted combination of graphs; evaluation is linear in the
// terms and the term order is irrelevant.
struct FormalSum {
    std::vector<std::pair<Dyadic, Graph>> terms;

    FormalSum& add(Dyadic coeff, Graph g) {
        terms.emplace_back(std::move(coeff), std::move(g));
        return *this;
    }
    FormalSum& append(const FormalSum& other, const Dyadic& scale = Dyadic(1)) {
        for (const auto& [c, g] : other.terms) terms.emplace_back(scale * c, g);
        return *this;
    }
};

// Resolves each dashed pair as present (+) or absent (-); 2^k terms with sign
// (-1)^{number of absent resolutions}. Whether a pair is a solid edge of g is
// irrelevant: the expansion overwrites its presence.
inline FormalSum expand_dashed(const Graph& g, const std::vector<std::pair<int, int>>& dashed) {
    for (auto [u, v] : dashed) require_pair(g, u, v, "expand_dashed");
    FormalSum out;
    std::uint32_t total = std::uint32_t{1} << dashed.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph t = g;
        int absent = 0;
        for (std::size_t i = 0; i < dashed.size(); ++i) {
            if (mask >> i & 1u)
                t.set_edge(dashed[i].first, dashed[i].second);
            else {
                t.clear_edge(dashed[i].first, dashed[i].second);
                ++absent;
            }
        }
        out.add(Dyadic(absent & 1 ? -1 : 1), std::move(t));
    }
    return out;
}

// sum of coeff * phi(term), with the subset-sum evaluator.
inline Dyadic eval_sum(const FormalSum& s, const EvalLimits& lim = kDefaultLimits) {
    Dyadic total;
    for (const auto& [c, g] : s.terms) total += c * phi_eulerian(g, lim);
    return total;
}

// Coefficients collected by canonical form; cancellations become exact zeros.
inline std::map<std::string, Dyadic> combine_by_canonical(const FormalSum& s) {
    std::map<std::string, Dyadic> acc;
    for (const auto& [c, g] : s.terms) acc[canonical_key(g)] += c;
    return acc;
}

inline bool is_symbolically_zero(const FormalSum& s) {
    for (const auto& [key, c] : combine_by_canonical(s))
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace phi

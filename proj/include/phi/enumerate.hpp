#pragma once

#include <istream>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "phi/canonical.hpp"
#include "phi/graph.hpp"
#include "phi/guard.hpp"

namespace phi {

enum class EnumStrategy {
    Auto,       // EdgeMasks for small n, Augment above
    EdgeMasks,  // all 2^(n(n-1)/2) edge masks, dedup by canonical form (n <= 7)
    Augment,    // extend each (n-1)-class by one vertex, dedup (n <= 8)
};

inline std::vector<Graph> enumerate_graphs_uncached(int n, EnumStrategy strategy);

// One canonical representative per isomorphism class, deterministic order.
// Auto results are cached per n; exhaustive mode tops out at n = 8.
inline const std::vector<Graph>& enumerate_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    static std::recursive_mutex mu;  // the augment strategy recurses into n - 1
    std::lock_guard<std::recursive_mutex> lk(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_graphs_uncached(n, EnumStrategy::Auto)).first;
    return it->second;
}

inline std::vector<Graph> enumerate_graphs_uncached(int n, EnumStrategy strategy) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
    if (strategy == EnumStrategy::Auto)
        strategy = n <= 5 ? EnumStrategy::EdgeMasks : EnumStrategy::Augment;
    if (n == 0) return {Graph(0)};

    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    if (strategy == EnumStrategy::EdgeMasks) {
        if (n > 7) throw GuardError("enumerate_graphs[edge-masks]", 7, n);
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
        std::uint64_t total = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1u) g.set_edge(pairs[i].first, pairs[i].second);
            Graph c = canonical_form(g);
            if (seen.insert(to_graph6(c)).second) out.push_back(c);
        }
    } else {
        if (n > 8) throw GuardError("enumerate_graphs[augment]", 8, n);
        for (const Graph& parent : enumerate_graphs(n - 1)) {
            std::uint32_t subsets = std::uint32_t{1} << (n - 1);
            for (std::uint32_t s = 0; s < subsets; ++s) {
                Graph c = canonical_form(add_vertex(parent, s));
                if (seen.insert(to_graph6(c)).second) out.push_back(c);
            }
        }
    }
    return out;
}

// Alternative input path: one graph6 string per line (blank lines skipped,
// optional ">>graph6<<" prefix tolerated).
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace phi

#pragma once

// Shared test helpers: seeded random connected graphs and the all-subsets
// oracle the solver is validated against. The oracle never touches the
// search path: it re-derives distances with the serial kernel and tries
// every subset in (size, lexicographic) order.

#include <numeric>
#include <stdexcept>

#include "kmetric/families.hpp"
#include "kmetric/pair_profile.hpp"

namespace testsupport {

using namespace kmetric;

inline Graph random_connected_graph(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    if (n == 1) return Graph::from_edges(1, {});
    for (;;) {
        std::uint64_t num = 1 + rng.below(3);  // edge probability num/4
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(4) < num) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
}

struct OracleResult {
    int dim = 0;
    std::vector<int> basis;
};

// first k-generator in (size, lex) order == canonical optimum
inline OracleResult oracle_dim_k(const Graph& g, int k) {
    PairProfile pp = pair_profile_serial(all_pairs_distances_serial(g));
    for (int size = 0; size <= g.n; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
            if (is_k_metric_generator(pp, comb, k).ok) return {size, comb};
            int i = size - 1;
            while (i >= 0 && comb[i] == g.n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("oracle found no generator");
}

inline int oracle_max_clique(const Graph& g) {
    int best = 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.n); ++mask) {
        std::vector<int> vs;
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) vs.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                clique = g.has_edge(vs[i], vs[j]);
        if (clique) best = std::max(best, static_cast<int>(vs.size()));
    }
    return best;
}

}  // namespace testsupport

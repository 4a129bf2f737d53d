#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kmetric/graph.hpp"

namespace kmetric {

Graph path_graph(int n);
Graph cycle_graph(int n);       // n >= 3
Graph complete_graph(int n);
Graph empty_graph(int n);       // no edges; join operand only
Graph complete_bipartite_graph(int r, int s);
Graph star_graph(int leaves);   // K_{1,leaves}, hub last
Graph wheel_graph(int rim);     // cycle + hub, hub last, rim >= 3
Graph fan_graph(int rim);       // path + hub, hub last, rim >= 1
Graph spider_graph(const std::vector<int>& leg_lengths);  // centre 0

Graph join_graphs(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);  // (i,j) -> i*|H|+j
Graph strong_product(const Graph& g, const Graph& h);

/// Uniform labelled tree decoded from a seeded integer sequence; identical
/// across runs and platforms for a fixed seed.
Graph random_tree(int n, std::uint64_t seed = 0);

/// Block graph: complete blocks glued one shared vertex at a time, the
/// attachment vertex drawn from the seeded generator.
Graph generalized_tree(const std::vector<int>& block_sizes, std::uint64_t seed = 0);

/// Fixed small graphs (ids 1, 2, 3, 5, 6) the test suite pins exact values
/// for: a twin gadget, two trees, a branch-heavy graph and a girth-5 graph.
Graph figure_fixture(int id);

/// Portable seeded generator for reproducible corpora.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    /// uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound);
};

struct FamilySpec {
    std::string family;
    std::vector<int> params;
    std::optional<std::uint64_t> seed;
    std::vector<FamilySpec> operands;  // two entries for join / products
};

Graph generate(const FamilySpec& spec);

/// Parses the CLI token form, e.g. {"join","path","4","complete","1"};
/// consumes tokens starting at pos.
FamilySpec parse_family_spec(const std::vector<std::string>& tokens, std::size_t& pos);

}  // namespace kmetric

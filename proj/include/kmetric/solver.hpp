#pragma once

#include "kmetric/branch_structure.hpp"
#include "kmetric/pair_profile.hpp"

namespace kmetric {

struct SolveOptions {
    int guard = 24;  // refuse larger instances; the search engine itself caps at 64
};

inline constexpr int kSolverHardCap = 64;

struct SolveReport {
    int k = 0;
    int dim = 0;
    std::vector<int> basis;  // lexicographically least optimal generator
    long long nodes_explored = 0;
    int lower_bound_used = 0;  // starting depth of the iterative deepening
    int forced_count = 0;      // vertices every solution must contain
};

struct DimProfile {
    int k_max = 0;
    std::vector<int> dims;  // dims[r-1] = dim_r, r = 1..k_max
};

/// Best applicable lower bound on dim_r: the branch contributions, the twin
/// class sum (r = 2), the forced-set size (r = dimensional value), r+1 for
/// non-paths, r always.
int lower_bound(const Graph& g, int r);

/// Exact dim_k and canonical basis via set-multicover search.
SolveReport dim_k_exact(const Graph& g, int k, const SolveOptions& opt = {});

/// dim_r for every r up to the dimensional value; each level starts at
/// max(lower bound, previous dim + 1).
DimProfile dim_profile(const Graph& g, const SolveOptions& opt = {});

}  // namespace kmetric

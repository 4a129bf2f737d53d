#pragma once

#include <optional>

#include "kmetric/distance.hpp"
#include "kmetric/graph.hpp"

namespace kmetric {

/// One leg of an exterior major vertex: the corridor from a terminal
/// end-vertex to the major, listed leaf first, major last.
struct TerminalLeg {
    int leaf = -1;
    int length = 0;
    std::vector<int> path;
};

struct MajorBranch {
    int vertex = -1;
    std::vector<TerminalLeg> legs;  // ordered by leaf index
    int terminal_degree = 0;        // ter(w)
    int min_leg_length = 0;         // shortest leg
    int min_leg_pair_sum = 0;       // shortest two-leg sum through w
};

/// Exterior major vertices of terminal degree > 1 with their legs, plus the
/// global minima used by the dimensional-value and dimension bounds.
struct BranchStructure {
    std::vector<MajorBranch> majors;       // sorted by vertex
    std::optional<int> min_leg_pair_sum;   // absent iff majors is empty
    int total_terminal_degree = 0;         // sum of ter(w) over majors

    const MajorBranch* find(int vertex) const;
};

BranchStructure branch_structure(const Graph& g, const DistanceMatrix& dm);

/// Lower-bound contribution of one major vertex to dim_r: the minimum number
/// of its leg vertices any r-metric generator must contain.
int branch_contribution(const MajorBranch& b, int r);

/// Dimensional value of a tree that is not a path (equals the shortest
/// two-leg sum over its exterior major vertices).
int tree_dimensional_k(const Graph& t);

struct TreeDimResult {
    int dim = 0;
    std::vector<int> basis;  // constructive generator of exactly that size
};

/// Closed-form dim_r for a non-path tree, 1 <= r <= tree_dimensional_k(t),
/// together with the witness generator assembled from leg prefixes.
TreeDimResult dim_r_tree(const Graph& t, int r);

/// dim_k of the path graph on n vertices, 1 <= k <= n-1.
int dim_k_path(int n, int k);

/// Lexicographically least k-metric basis of the path on n vertices:
/// one leaf for k=1, both leaves for k=2, any k+1 vertices work for k>=3.
std::vector<int> path_basis(int n, int k);

}  // namespace kmetric

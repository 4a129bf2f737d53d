#include "kmetric/branch_structure.hpp"

#include <algorithm>
#include <limits>

namespace kmetric {

const MajorBranch* BranchStructure::find(int vertex) const {
    for (const auto& b : majors)
        if (b.vertex == vertex) return &b;
    return nullptr;
}

namespace {

// Corridor from a degree-1 vertex to the first vertex of degree >= 3.
TerminalLeg walk_leg(const Graph& g, int leaf, int major) {
    TerminalLeg leg;
    leg.leaf = leaf;
    leg.path.push_back(leaf);
    int prev = -1, cur = leaf;
    while (cur != major) {
        int next = -1;
        for (int v : g.adj[cur])
            if (v != prev) next = v;
        if (next < 0) throw std::logic_error("leg walk left the corridor");
        prev = cur;
        cur = next;
        leg.path.push_back(cur);
    }
    leg.length = static_cast<int>(leg.path.size()) - 1;
    return leg;
}

}  // namespace

BranchStructure branch_structure(const Graph& g, const DistanceMatrix& dm) {
    std::vector<int> majors;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) majors.push_back(v);

    BranchStructure bs;
    if (majors.empty()) return bs;  // paths and cycles

    std::vector<std::vector<int>> terminals(g.n);
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) != 1) continue;
        // terminal of w iff strictly closer to w than to every other major
        int best = std::numeric_limits<int>::max(), arg = -1, ties = 0;
        for (int w : majors) {
            int d = dm(u, w);
            if (d < best) {
                best = d;
                arg = w;
                ties = 1;
            } else if (d == best) {
                ++ties;
            }
        }
        if (ties == 1) terminals[arg].push_back(u);
    }

    for (int w : majors) {
        if (terminals[w].size() < 2) continue;
        MajorBranch b;
        b.vertex = w;
        for (int leaf : terminals[w]) b.legs.push_back(walk_leg(g, leaf, w));
        b.terminal_degree = static_cast<int>(b.legs.size());
        int l1 = std::numeric_limits<int>::max(), l2 = l1;
        for (const auto& leg : b.legs) {
            if (leg.length <= l1) {
                l2 = l1;
                l1 = leg.length;
            } else if (leg.length < l2) {
                l2 = leg.length;
            }
        }
        b.min_leg_length = l1;
        b.min_leg_pair_sum = l1 + l2;
        bs.total_terminal_degree += b.terminal_degree;
        bs.majors.push_back(std::move(b));
    }
    if (!bs.majors.empty()) {
        int z = std::numeric_limits<int>::max();
        for (const auto& b : bs.majors) z = std::min(z, b.min_leg_pair_sum);
        bs.min_leg_pair_sum = z;
    }
    return bs;
}

int branch_contribution(const MajorBranch& b, int r) {
    if (b.terminal_degree < 2)
        throw Error("branch contribution needs terminal degree >= 2");
    int t = b.terminal_degree, l = b.min_leg_length;
    if (l <= r / 2) return (t - 1) * (r - l) + l;
    return (t - 1) * ((r + 1) / 2) + r / 2;
}

namespace {

struct TreeContext {
    DistanceMatrix dm;
    BranchStructure bs;
};

TreeContext tree_context(const Graph& t) {
    TreeContext ctx;
    ctx.dm = all_pairs_distances(t);
    if (t.edge_count() != t.n - 1) throw Error("input is not a tree");
    ctx.bs = branch_structure(t, ctx.dm);
    if (ctx.bs.majors.empty())
        throw Error("tree is a path: use the path formula (dim_k_path)");
    return ctx;
}

}  // namespace

int tree_dimensional_k(const Graph& t) {
    return tree_context(t).bs.min_leg_pair_sum.value();
}

TreeDimResult dim_r_tree(const Graph& t, int r) {
    TreeContext ctx = tree_context(t);
    int zeta = ctx.bs.min_leg_pair_sum.value();
    if (r < 1) throw Error("r must be positive");
    if (r > zeta)
        throw Error("no r-metric generator for r=" + std::to_string(r) +
                    ": the tree is " + std::to_string(zeta) + "-metric dimensional");

    TreeDimResult res;
    for (const auto& b : ctx.bs.majors) {
        res.dim += branch_contribution(b, r);
        // shortest leg plays the distinguished role; ties break on leaf index,
        // which is the leg order already in place
        std::size_t first = 0;
        for (std::size_t i = 1; i < b.legs.size(); ++i)
            if (b.legs[i].length < b.legs[first].length) first = i;
        int l = b.min_leg_length;
        for (std::size_t i = 0; i < b.legs.size(); ++i) {
            int take;
            if (l <= r / 2)
                take = i == first ? l : r - l;
            else
                take = i == first ? r / 2 : (r + 1) / 2;
            const auto& path = b.legs[i].path;
            for (int j = 0; j < take; ++j) res.basis.push_back(path[j]);
        }
    }
    std::sort(res.basis.begin(), res.basis.end());
    if (static_cast<int>(res.basis.size()) != res.dim)
        throw std::logic_error("witness size disagrees with the closed form");
    return res;
}

int dim_k_path(int n, int k) {
    if (n < 2) throw Error("path formula requires n >= 2");
    if (k < 1 || k > n - 1)
        throw Error("no k-metric generator for k=" + std::to_string(k) + ": the path on " +
                    std::to_string(n) + " vertices is " + std::to_string(n - 1) +
                    "-metric dimensional");
    if (k == 1) return 1;
    if (k == 2) return 2;
    return k + 1;
}

std::vector<int> path_basis(int n, int k) {
    int size = dim_k_path(n, k);
    if (k == 1) return {0};
    if (k == 2) return {0, n - 1};
    std::vector<int> out(size);
    for (int i = 0; i < size; ++i) out[i] = i;
    return out;
}

}  // namespace kmetric

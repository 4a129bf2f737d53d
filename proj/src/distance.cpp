#include "kmetric/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace kmetric {

namespace {

constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

// Fills one row of the matrix with hop distances from src.
void bfs_row(const Graph& g, int src, std::uint16_t* row, std::vector<int>& queue) {
    std::fill(row, row + g.n, kUnreached);
    queue.clear();
    queue.push_back(src);
    row[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint16_t du = row[u];
        for (int v : g.adj[u])
            if (row[v] == kUnreached) {
                row[v] = static_cast<std::uint16_t>(du + 1);
                queue.push_back(v);
            }
    }
}

void check_metric_ready(const Graph& g) {
    if (g.n > kDistanceMatrixCap)
        throw Error("graph too large for a dense distance matrix (n=" + std::to_string(g.n) +
                    ", cap " + std::to_string(kDistanceMatrixCap) + ")");
    if (!is_connected(g)) throw Error("graph is disconnected");
}

}  // namespace

int DistanceMatrix::diameter() const {
    std::uint16_t best = 0;
    for (auto v : d) best = std::max(best, v);
    return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    check_metric_ready(g);
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.resize(static_cast<std::size_t>(g.n) * g.n);
#pragma omp parallel
    {
        std::vector<int> queue;
        queue.reserve(g.n);
#pragma omp for schedule(dynamic, 16)
        for (int s = 0; s < g.n; ++s)
            bfs_row(g, s, dm.d.data() + static_cast<std::size_t>(s) * g.n, queue);
    }
    return dm;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    check_metric_ready(g);
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.resize(static_cast<std::size_t>(g.n) * g.n);
    std::vector<int> queue;
    queue.reserve(g.n);
    for (int s = 0; s < g.n; ++s)
        bfs_row(g, s, dm.d.data() + static_cast<std::size_t>(s) * g.n, queue);
    return dm;
}

std::optional<int> girth(const Graph& g) {
    // min over sources of the shortest cycle seen from that root; exact because
    // a shortest cycle is recovered by the BFS rooted at any of its vertices
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n), parent(g.n), queue;
    queue.reserve(g.n);
    for (int s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        parent[s] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.adj[u]) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace {

struct CliqueSearch {
    const std::vector<std::uint64_t>& nbr;
    int best = 0;

    void expand(std::uint64_t cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        // greedy colouring bound: vertices in one class are pairwise non-adjacent
        int order[64], colors[64], m = 0, color = 0;
        std::uint64_t uncolored = cand;
        while (uncolored) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                avail &= ~(std::uint64_t{1} << v) & ~nbr[v];
                uncolored &= ~(std::uint64_t{1} << v);
                order[m] = v;
                colors[m] = color;
                ++m;
            }
        }
        for (int i = m - 1; i >= 0; --i) {
            if (size + colors[i] <= best) return;
            int v = order[i];
            expand(cand & nbr[v], size + 1);
            cand &= ~(std::uint64_t{1} << v);
        }
    }
};

}  // namespace

int clique_number_exact(const Graph& g) {
    if (g.n > kCliqueSolverCap)
        throw Error("clique solver limited to n <= " + std::to_string(kCliqueSolverCap) +
                    " (got n=" + std::to_string(g.n) + ")");
    std::vector<std::uint64_t> nbr(g.n, 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) nbr[u] |= std::uint64_t{1} << v;
    CliqueSearch cs{nbr};
    std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    cs.expand(all, 0);
    return cs.best;
}

StructuralStats structural_stats(const Graph& g, const DistanceMatrix& dm) {
    StructuralStats st;
    st.min_degree = g.n;
    st.max_degree = 0;
    for (int v = 0; v < g.n; ++v) {
        st.min_degree = std::min(st.min_degree, g.degree(v));
        st.max_degree = std::max(st.max_degree, g.degree(v));
    }
    if (g.n == 1) st.min_degree = 0;
    st.girth = girth(g);
    st.clique_number = clique_number_exact(g);
    st.diameter = dm.diameter();
    int m = g.edge_count();
    st.is_tree = m == g.n - 1;
    st.is_path = st.is_tree && st.max_degree <= 2;
    st.is_cycle = g.n >= 3 && m == g.n && st.min_degree == 2 && st.max_degree == 2;
    return st;
}

}  // namespace kmetric

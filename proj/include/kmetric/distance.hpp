#pragma once

#include <cstdint>
#include <optional>

#include "kmetric/graph.hpp"

namespace kmetric {

/// All-pairs BFS hop distances. Dense, 16-bit entries, n capped at 4096.
struct DistanceMatrix {
    int n = 0;
    std::vector<std::uint16_t> d;

    std::uint16_t operator()(int u, int v) const {
        return d[static_cast<std::size_t>(u) * n + v];
    }
    const std::uint16_t* row(int u) const { return d.data() + static_cast<std::size_t>(u) * n; }
    int diameter() const;
};

inline constexpr int kDistanceMatrixCap = 4096;

DistanceMatrix all_pairs_distances(const Graph& g);         // OpenMP over sources
DistanceMatrix all_pairs_distances_serial(const Graph& g);  // reference kernel

struct StructuralStats {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> girth;  // absent iff acyclic
    int clique_number = 0;
    int diameter = 0;
    bool is_path = false;
    bool is_cycle = false;
    bool is_tree = false;
};

inline constexpr int kCliqueSolverCap = 64;

StructuralStats structural_stats(const Graph& g, const DistanceMatrix& dm);

/// Exact maximum clique, branch and bound with greedy colouring. n <= 64.
int clique_number_exact(const Graph& g);

/// Length of a shortest cycle, absent for acyclic graphs.
std::optional<int> girth(const Graph& g);

}  // namespace kmetric

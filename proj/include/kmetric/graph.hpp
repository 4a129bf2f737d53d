#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kmetric {

/// Domain and format errors thrown by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

enum class Connectivity { required, any };

/// Simple undirected graph, vertices 0..n-1, sorted adjacency lists.
/// Immutable after construction; safe for concurrent reads.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    bool operator==(const Graph&) const = default;

    /// Validates simplicity (no loops, no duplicates) and index range.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            Connectivity req = Connectivity::any);
};

bool is_connected(const Graph& g);

/// Edge-list format: header "n m", then m lines "u v". '#' starts a comment line.
Graph parse_edge_list(std::string_view text, Connectivity req = Connectivity::required);
std::string to_edge_list(const Graph& g);

/// graph6, short form only (n <= 62).
Graph parse_graph6(std::string_view text, Connectivity req = Connectivity::required);
std::string to_graph6(const Graph& g);

}  // namespace kmetric

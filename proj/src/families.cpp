#include "kmetric/families.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace kmetric {

namespace {
using EdgeList = std::vector<std::pair<int, int>>;
}

Graph path_graph(int n) {
    if (n < 1) throw Error("path needs n >= 1");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    for (auto& [u, v] : e)
        if (u > v) std::swap(u, v);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
    if (n < 1) throw Error("complete graph needs n >= 1");
    EdgeList e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph empty_graph(int n) {
    if (n < 1) throw Error("empty graph needs n >= 1");
    return Graph::from_edges(n, {});
}

Graph complete_bipartite_graph(int r, int s) {
    if (r < 1 || s < 1) throw Error("complete bipartite parts must be non-empty");
    EdgeList e;
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) e.emplace_back(u, r + v);
    return Graph::from_edges(r + s, e);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw Error("star needs at least one leaf");
    return join_graphs(empty_graph(leaves), complete_graph(1));
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw Error("wheel needs a rim of at least 3 vertices");
    return join_graphs(cycle_graph(rim), complete_graph(1));
}

Graph fan_graph(int rim) {
    if (rim < 1) throw Error("fan needs a rim of at least 1 vertex");
    return join_graphs(path_graph(rim), complete_graph(1));
}

Graph spider_graph(const std::vector<int>& leg_lengths) {
    if (leg_lengths.empty()) throw Error("spider needs at least one leg");
    for (int l : leg_lengths)
        if (l < 1) throw Error("spider leg lengths must be positive");
    EdgeList e;
    int next = 1;
    for (int l : leg_lengths) {
        int prev = 0;
        for (int i = 0; i < l; ++i) {
            e.emplace_back(std::min(prev, next), std::max(prev, next));
            prev = next++;
        }
    }
    return Graph::from_edges(next, e);
}

Graph join_graphs(const Graph& g, const Graph& h) {
    EdgeList e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(g.n + u, g.n + v);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) e.emplace_back(u, g.n + v);
    return Graph::from_edges(g.n + h.n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    EdgeList e;
    auto id = [&](int i, int j) { return i * h.n + j; };
    for (int i = 0; i < g.n; ++i)
        for (auto [u, v] : h.edges()) e.emplace_back(id(i, u), id(i, v));
    for (int j = 0; j < h.n; ++j)
        for (auto [u, v] : g.edges()) e.emplace_back(id(u, j), id(v, j));
    return Graph::from_edges(g.n * h.n, e);
}

Graph strong_product(const Graph& g, const Graph& h) {
    EdgeList e;
    auto id = [&](int i, int j) { return i * h.n + j; };
    for (int i = 0; i < g.n; ++i)
        for (auto [u, v] : h.edges()) e.emplace_back(id(i, u), id(i, v));
    for (int j = 0; j < h.n; ++j)
        for (auto [u, v] : g.edges()) e.emplace_back(id(u, j), id(v, j));
    for (auto [a, b] : g.edges())
        for (auto [u, v] : h.edges()) {
            e.emplace_back(id(a, u), id(b, v));
            e.emplace_back(id(a, v), id(b, u));
        }
    return Graph::from_edges(g.n * h.n, e);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw Error("random tree needs n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    SplitMix64 rng(seed);
    std::vector<int> seq(n - 2);
    for (auto& a : seq) a = static_cast<int>(rng.below(n));

    std::vector<int> degree(n, 1);
    for (int a : seq) ++degree[a];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    EdgeList e;
    for (int a : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        e.emplace_back(std::min(leaf, a), std::max(leaf, a));
        if (--degree[a] == 1) leaves.insert(a);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges(n, e);
}

Graph generalized_tree(const std::vector<int>& block_sizes, std::uint64_t seed) {
    if (block_sizes.size() < 2) throw Error("generalized tree needs at least two blocks");
    for (int b : block_sizes)
        if (b < 2) throw Error("generalized tree blocks need at least two vertices");
    SplitMix64 rng(seed);
    EdgeList e;
    int n = block_sizes[0];
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    for (std::size_t i = 1; i < block_sizes.size(); ++i) {
        int attach = static_cast<int>(rng.below(n));
        std::vector<int> block{attach};
        for (int j = 1; j < block_sizes[i]; ++j) block.push_back(n++);
        for (std::size_t a = 0; a < block.size(); ++a)
            for (std::size_t b = a + 1; b < block.size(); ++b)
                e.emplace_back(std::min(block[a], block[b]), std::max(block[a], block[b]));
    }
    return Graph::from_edges(n, e);
}

Graph figure_fixture(int id) {
    switch (id) {
        case 1:
            return Graph::from_edges(
                5, {{0, 1}, {1, 4}, {4, 3}, {3, 0}, {0, 2}, {2, 4}, {1, 2}, {2, 3}});
        case 2:
            return Graph::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {5, 6}});
        case 3:
            return Graph::from_edges(18, {{0, 1},   {1, 2},   {2, 3},  {3, 4},  {4, 5},
                                          {5, 6},   {7, 8},   {8, 2},  {2, 11}, {2, 12},
                                          {12, 13}, {13, 14}, {14, 15},{15, 16},{10, 14},
                                          {14, 4},  {4, 9},   {3, 13}, {10, 17}});
        case 5:
            return Graph::from_edges(
                8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}, {6, 7}, {7, 0}});
        case 6:
            return Graph::from_edges(
                9, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {5, 6}, {5, 7}, {7, 8}});
        default:
            throw Error("unknown figure fixture " + std::to_string(id) +
                        " (available: 1, 2, 3, 5, 6)");
    }
}

Graph generate(const FamilySpec& spec) {
    const auto& f = spec.family;
    auto arity = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw Error(f + " expects " + std::to_string(k) + " integer parameter(s)");
    };
    if (f == "join" || f == "cartesian_product" || f == "strong_product") {
        if (spec.operands.size() != 2) throw Error(f + " expects two operand graphs");
        Graph a = generate(spec.operands[0]);
        Graph b = generate(spec.operands[1]);
        if (f == "join") return join_graphs(a, b);
        if (f == "cartesian_product") return cartesian_product(a, b);
        return strong_product(a, b);
    }
    if (f == "path") { arity(1); return path_graph(spec.params[0]); }
    if (f == "cycle") { arity(1); return cycle_graph(spec.params[0]); }
    if (f == "complete") { arity(1); return complete_graph(spec.params[0]); }
    if (f == "empty") { arity(1); return empty_graph(spec.params[0]); }
    if (f == "complete_bipartite") {
        arity(2);
        return complete_bipartite_graph(spec.params[0], spec.params[1]);
    }
    if (f == "star") { arity(1); return star_graph(spec.params[0]); }
    if (f == "wheel") { arity(1); return wheel_graph(spec.params[0]); }
    if (f == "fan") { arity(1); return fan_graph(spec.params[0]); }
    if (f == "spider") {
        if (spec.params.empty()) throw Error("spider expects leg lengths");
        return spider_graph(spec.params);
    }
    if (f == "random_tree") {
        arity(1);
        return random_tree(spec.params[0], spec.seed.value_or(0));
    }
    if (f == "generalized_tree") {
        if (spec.params.empty()) throw Error("generalized_tree expects block sizes");
        return generalized_tree(spec.params, spec.seed.value_or(0));
    }
    if (f == "figure_fixture") { arity(1); return figure_fixture(spec.params[0]); }
    throw Error("unknown family '" + f + "'");
}

namespace {

bool parse_number(const std::string& tok, long long& out) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

}  // namespace

FamilySpec parse_family_spec(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size()) throw Error("expected a family name");
    FamilySpec spec;
    spec.family = tokens[pos++];
    auto take_ints = [&](std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            long long v;
            if (pos >= tokens.size() || !parse_number(tokens[pos], v))
                throw Error(spec.family + ": expected " + std::to_string(count) +
                            " integer parameter(s)");
            spec.params.push_back(static_cast<int>(v));
            ++pos;
        }
    };
    const auto& f = spec.family;
    if (f == "join" || f == "cartesian_product" || f == "strong_product") {
        spec.operands.push_back(parse_family_spec(tokens, pos));
        spec.operands.push_back(parse_family_spec(tokens, pos));
    } else if (f == "complete_bipartite") {
        take_ints(2);
    } else if (f == "spider") {
        // explicit leg count keeps the token stream unambiguous
        take_ints(1);
        int legs = spec.params[0];
        spec.params.clear();
        if (legs < 1) throw Error("spider needs at least one leg");
        take_ints(static_cast<std::size_t>(legs));
    } else if (f == "random_tree") {
        take_ints(1);
        long long v;
        if (pos < tokens.size() && parse_number(tokens[pos], v)) {
            spec.seed = static_cast<std::uint64_t>(v);
            ++pos;
        }
    } else if (f == "generalized_tree") {
        take_ints(1);
        int blocks = spec.params[0];
        spec.params.clear();
        if (blocks < 2) throw Error("generalized_tree needs at least two blocks");
        take_ints(static_cast<std::size_t>(blocks));
        long long v;
        if (pos < tokens.size() && parse_number(tokens[pos], v)) {
            spec.seed = static_cast<std::uint64_t>(v);
            ++pos;
        }
    } else {
        take_ints(1);
    }
    return spec;
}

}  // namespace kmetric

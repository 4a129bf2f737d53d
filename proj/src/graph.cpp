#include "kmetric/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace kmetric {

int Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return static_cast<int>(twice / 2);
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        Connectivity req) {
    if (n < 1) throw Error("graph must have at least one vertex");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range for n=" + std::to_string(n));
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int u = 0; u < n; ++u) {
        auto& nb = g.adj[u];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw Error("duplicate edge at vertex " + std::to_string(u));
    }
    if (req == Connectivity::required && !is_connected(g))
        throw Error("graph is disconnected");
    return g;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.n;
}

namespace {

int parse_int(std::string_view tok, std::string_view what, int lineno) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error("line " + std::to_string(lineno) + ": malformed " + std::string(what) +
                    " '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph parse_edge_list(std::string_view text, Connectivity req) {
    std::vector<std::pair<int, int>> edges;
    int n = -1, m = -1, lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (n < 0) {
            if (toks.size() != 2) throw Error("line 1: expected header 'n m'");
            n = parse_int(toks[0], "vertex count", lineno);
            m = parse_int(toks[1], "edge count", lineno);
            if (n < 1) throw Error("vertex count must be positive");
            if (m < 0) throw Error("edge count must be non-negative");
            continue;
        }
        if (toks.size() != 2)
            throw Error("line " + std::to_string(lineno) + ": expected 'u v'");
        edges.emplace_back(parse_int(toks[0], "vertex", lineno),
                           parse_int(toks[1], "vertex", lineno));
    }
    if (n < 0) throw Error("empty input, expected edge-list header 'n m'");
    if (static_cast<int>(edges.size()) != m)
        throw Error("header declares " + std::to_string(m) + " edges, found " +
                    std::to_string(edges.size()));
    return Graph::from_edges(n, edges, req);
}

std::string to_edge_list(const Graph& g) {
    auto es = g.edges();
    std::ostringstream out;
    out << g.n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(std::string_view text, Connectivity req) {
    // strip trailing newline / optional ">>graph6<<" header
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Error("empty graph6 input");
    if (text[0] == 126)
        throw Error("graph6 long form (n > 62) is not supported");
    for (char c : text)
        if (c < 63 || c > 126)
            throw Error("invalid graph6 character (byte " +
                        std::to_string(static_cast<int>(static_cast<unsigned char>(c))) + ")");
    int n = text[0] - 63;
    if (n < 1) throw Error("graph6 vertex count must be positive");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes)
        throw Error("graph6 bit field truncated or overlong: expected " +
                    std::to_string(nbytes) + " data bytes, got " + std::to_string(text.size() - 1));
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // padding bits must be zero
    for (std::size_t b = nbits; b < nbytes * 6; ++b) {
        int byte = text[1 + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw Error("graph6 padding bits must be zero");
    }
    return Graph::from_edges(n, edges, req);
}

std::string to_graph6(const Graph& g) {
    if (g.n > 62) throw Error("graph6 output limited to n <= 62");
    std::size_t nbits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
    std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(g.n + 63);
    std::size_t bit = 0;
    for (int v = 1; v < g.n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) out[1 + bit / 6] += 1 << (5 - bit % 6);
    return out;
}

}  // namespace kmetric

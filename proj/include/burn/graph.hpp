#ifndef BURN_GRAPH_HPP
#define BURN_GRAPH_HPP

#include "burn/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace burn {

/// Distance marker for vertices unreachable from the BFS source.
inline constexpr int kUnreachable = -1;

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Invariants: no self-loops, no duplicate edges, adjacency lists sorted
/// ascending and symmetric, n >= 1. Construct through make_graph or
/// load_edge_list; treat as immutable afterwards.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int vertex_count() const { return n; }

    int edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& nb : adj) deg_sum += nb.size();
        return static_cast<int>(deg_sum / 2);
    }

    bool has_edge(int u, int v) const {
        const auto& nb = adj[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
};

/// Builds a validated Graph from an edge list. Throws std::invalid_argument
/// on self-loops, duplicate edges, or out-of-range ids.
inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("make_graph: vertex count must be at least 1");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("make_graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("make_graph: self-loop");
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("make_graph: duplicate edge");
    }
    return g;
}

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> a >> b)) return false;
    if (ss >> extra) return false;
    return true;
}

} // namespace detail

/// Parses the edge-list text format:
///   first non-comment line "n m", then m lines "u v" with 0 <= u,v < n.
/// Lines starting with '#' and blank lines are ignored; CRLF accepted.
inline Graph load_edge_list(std::istream& in) {
    std::string line;
    long long n = -1, m = -1;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("edge list, line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::blank_or_comment(line)) continue;
        if (!detail::parse_two_ints(line, n, m)) fail("expected header \"n m\"");
        break;
    }
    if (n < 0) throw ParseError("edge list: missing header line");
    if (n < 1) fail("vertex count must be at least 1");
    if (m < 0) fail("negative edge count");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    long long seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (detail::blank_or_comment(line)) continue;
        long long u, v;
        if (!detail::parse_two_ints(line, u, v)) fail("expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex id out of range");
        if (u == v) fail("self-loop");
        const int ui = static_cast<int>(u), vi = static_cast<int>(v);
        const auto& nb = adj[static_cast<std::size_t>(ui)];
        if (std::find(nb.begin(), nb.end(), vi) != nb.end()) fail("duplicate edge");
        adj[static_cast<std::size_t>(ui)].push_back(vi);
        adj[static_cast<std::size_t>(vi)].push_back(ui);
        edges.emplace_back(ui, vi);
        ++seen;
    }
    if (seen < m) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(seen));
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!detail::blank_or_comment(line)) fail("trailing content after edge list");
    }
    return make_graph(static_cast<int>(n), edges);
}

inline Graph load_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return load_edge_list(ss);
}

inline Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return load_edge_list(in);
}

/// Canonical serialization: header, then edges "u v" with u < v, sorted.
/// Reloading the output reproduces the adjacency structure exactly.
inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(g, ss);
    return ss.str();
}

/// Shortest-path hop counts from s; kUnreachable where no path exists.
/// Neighbors are expanded in ascending id order.
inline std::vector<int> bfs_distances(const Graph& g, int s) {
    if (s < 0 || s >= g.n) throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.n), kUnreachable);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

inline bool is_tree(const Graph& g) {
    return g.edge_count() == g.n - 1 && is_connected(g);
}

/// Per-vertex eccentricities plus radius/diameter/center of a connected graph.
struct Metrics {
    std::vector<int> eccentricity;
    int radius = 0;
    int diameter = 0;
    int center = 0; // smallest-id vertex attaining the radius
};

/// All-source BFS; fine for the small graphs and pieces this toolkit measures.
inline Metrics metrics(const Graph& g) {
    Metrics m;
    m.eccentricity.resize(static_cast<std::size_t>(g.n));
    m.radius = g.n;
    m.diameter = 0;
    for (int s = 0; s < g.n; ++s) {
        auto dist = bfs_distances(g, s);
        int ecc = 0;
        for (int d : dist) {
            if (d == kUnreachable) throw NotConnectedError("metrics: graph is not connected");
            ecc = std::max(ecc, d);
        }
        m.eccentricity[static_cast<std::size_t>(s)] = ecc;
        if (ecc < m.radius) {
            m.radius = ecc;
            m.center = s;
        }
        m.diameter = std::max(m.diameter, ecc);
    }
    return m;
}

} // namespace burn

#endif // BURN_GRAPH_HPP

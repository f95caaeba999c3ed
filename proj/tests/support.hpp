#ifndef BURN_TESTS_SUPPORT_HPP
#define BURN_TESTS_SUPPORT_HPP

// Test-only oracles and fixtures. Everything here is deliberately written
// against the plainest possible formulations (linear scans, Floyd-Warshall)
// so it stays independent of the library's implementation paths.

#include "burn/burn.hpp"

#include <cstdint>
#include <vector>

namespace testsupport {

// Smallest k >= 1 with 3k^2 - 16k >= 4n, by linear scan.
inline int brute_burning_bound(long long n) {
    for (long long k = 1;; ++k)
        if (3 * k * k - 16 * k >= 4 * n) return static_cast<int>(k);
}

// Smallest k >= 0 with (4k+3)^2 >= 24n+33, by linear scan.
inline int brute_land_lu(long long n) {
    for (long long k = 0;; ++k)
        if ((4 * k + 3) * (4 * k + 3) >= 24 * n + 33) return static_cast<int>(k);
}

// Smallest k >= 0 with k^2 >= n.
inline int brute_ceil_sqrt(long long n) {
    for (long long k = 0;; ++k)
        if (k * k >= n) return static_cast<int>(k);
}

// Smallest k >= 1 with (2k-1)^2 >= 8n+1.
inline int brute_elementary_bound(long long n) {
    for (long long k = 1;; ++k)
        if ((2 * k - 1) * (2 * k - 1) >= 8 * n + 1) return static_cast<int>(k);
}

// All elements of R admissible for (j, m), by direct scan of both bounds.
inline std::vector<int> admissible_radii(const std::vector<int>& R, int j, int m) {
    int rmax = R.empty() ? 0 : R.back();
    for (int r : R) rmax = std::max(rmax, r);
    std::vector<int> out;
    for (int r : R)
        if (j + 2 * m <= 2 * r && 2 * r <= 2 * rmax - j + 2 * m + 6) out.push_back(r);
    return out;
}

// All-pairs distances by Floyd-Warshall; -1 where unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const burn::Graph& g) {
    const int n = g.n;
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)]) d[u][v] = 1;
    for (int w = 0; w < n; ++w)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (d[u][w] + d[w][v] < d[u][v]) d[u][v] = d[u][w] + d[w][v];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (d[u][v] >= inf) d[u][v] = -1;
    return d;
}

// Tree whose decomposition at exactly this k uses all k iterations with no
// terminal extraction: center 0 plus, for j = k-1 down to 1, one leg made of
// a path of j+1 vertices with max(floor(j/2)-1, 0) extra leaves attached to
// the path's second-to-last vertex. At iteration j the deepest vertices are
// the tips of leg j, the max-radius ancestor lands on the leg's top vertex,
// and the subtree there has exactly j + floor(j/2) vertices, the smallest
// size that still takes the whole-leg branch consuming radius j.
inline burn::Graph full_length_fixture(int k) {
    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    for (int j = k - 1; j >= 1; --j) {
        int prev = 0;
        int second_to_last = -1;
        for (int i = 0; i < j + 1; ++i) {
            if (i == j) second_to_last = prev;
            edges.emplace_back(prev, next_id);
            prev = next_id++;
        }
        const int bush = std::max(j / 2 - 1, 0);
        for (int b = 0; b < bush; ++b) edges.emplace_back(second_to_last, next_id++);
    }
    return burn::make_graph(next_id, edges);
}

// Independent piece check: diameter of the subgraph of `tree` induced by
// `piece`, via double BFS over the induced adjacency. For a tree piece the
// radius is ceil(diameter/2).
inline int induced_tree_diameter(const burn::Graph& tree, const std::vector<int>& piece) {
    const int s = static_cast<int>(piece.size());
    std::vector<int> ids(piece);
    std::sort(ids.begin(), ids.end());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    auto member = [&](int v) { return std::binary_search(ids.begin(), ids.end(), v); };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(s));
    for (int v : ids)
        for (int u : tree.adj[static_cast<std::size_t>(v)])
            if (u > v && member(u)) {
                adj[static_cast<std::size_t>(local(v))].push_back(local(u));
                adj[static_cast<std::size_t>(local(u))].push_back(local(v));
            }
    std::vector<int> dist(static_cast<std::size_t>(s));
    auto bfs = [&](int start) {
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{start};
        dist[static_cast<std::size_t>(start)] = 0;
        int far = start;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(far)]) far = u;
            for (int w : adj[static_cast<std::size_t>(u)])
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
        }
        return far;
    };
    const int b = bfs(bfs(0));
    return dist[static_cast<std::size_t>(b)];
}

} // namespace testsupport

#endif // BURN_TESTS_SUPPORT_HPP

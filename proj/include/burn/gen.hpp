#ifndef BURN_GEN_HPP
#define BURN_GEN_HPP

#include "burn/bounds.hpp"
#include "burn/graph.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace burn {

/// Deterministic 64-bit generator with a fixed, documented update rule so
/// that seeded corpora are reproducible across platforms and languages:
///   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
///   output = x * 2685821657736338717  (0x2545F4914F6CDD1D)
/// A zero seed is replaced by 0x9E3779B97F4A7C15. Bounded draws use plain
/// modulo reduction: next_below(b) = next() % b.
class Xorshift64Star {
  public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed ? seed : 0x9E3779B97F4A7C15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

inline Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

inline Graph gen_star(int n) {
    if (n < 1) throw std::invalid_argument("gen_star: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return make_graph(n, edges);
}

inline Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("gen_complete: n must be positive");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

inline bool is_spider(const Graph& g) {
    if (!is_tree(g)) return false;
    int big = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) ++big;
    return big <= 1;
}

inline bool is_caterpillar(const Graph& g) {
    if (!is_tree(g)) return false;
    // Internal vertices of a tree always induce a subtree, so it suffices to
    // check that no internal vertex has three internal neighbors.
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) < 2) continue;
        int internal_neighbors = 0;
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (g.degree(u) >= 2) ++internal_neighbors;
        if (internal_neighbors > 2) return false;
    }
    return true;
}

/// Center vertex 0 with one path of each requested length hanging off it.
inline Graph gen_spider(const std::vector<int>& leg_lengths) {
    if (leg_lengths.empty()) throw std::invalid_argument("gen_spider: no legs");
    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    for (int len : leg_lengths) {
        if (len < 1) throw std::invalid_argument("gen_spider: leg length must be positive");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next_id);
            prev = next_id++;
        }
    }
    Graph g = make_graph(next_id, edges);
    if (!is_spider(g)) throw InternalError("gen_spider: output is not a spider");
    return g;
}

/// Spine path 0..spine-1 with legs_per_spine[i] leaves attached to spine
/// vertex i; leaves are numbered spine,spine+1,... in spine order.
inline Graph gen_caterpillar(int spine, const std::vector<int>& legs_per_spine) {
    if (spine < 1) throw std::invalid_argument("gen_caterpillar: spine must be positive");
    if (static_cast<int>(legs_per_spine.size()) != spine)
        throw std::invalid_argument("gen_caterpillar: need one leg count per spine vertex");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int next_id = spine;
    for (int i = 0; i < spine; ++i) {
        if (legs_per_spine[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("gen_caterpillar: negative leg count");
        for (int l = 0; l < legs_per_spine[static_cast<std::size_t>(i)]; ++l)
            edges.emplace_back(i, next_id++);
    }
    Graph g = make_graph(next_id, edges);
    if (!is_caterpillar(g)) throw InternalError("gen_caterpillar: output is not a caterpillar");
    return g;
}

namespace detail {

/// Uniform random labeled tree: draw a Prufer sequence of length n-2 and
/// decode it with the linear-time pointer algorithm.
inline Graph random_tree_with(Xorshift64Star& rng, int n) {
    if (n == 1) return make_graph(1, {});
    if (n == 2) return make_graph(2, {{0, 1}});
    std::vector<int> code(static_cast<std::size_t>(n) - 2);
    for (auto& c : code) c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    int ptr = 0;
    while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int c : code) {
        edges.emplace_back(leaf, c);
        if (--degree[static_cast<std::size_t>(c)] == 1 && c < ptr) {
            leaf = c;
        } else {
            ++ptr;
            while (degree[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return make_graph(n, edges);
}

} // namespace detail

inline Graph gen_random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_tree: n must be positive");
    Xorshift64Star rng(seed);
    return detail::random_tree_with(rng, n);
}

/// Random tree plus m-(n-1) distinct random non-tree edges.
inline Graph gen_random_connected(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_connected: n must be positive");
    const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges)
        throw std::invalid_argument("gen_random_connected: edge count out of range");
    Xorshift64Star rng(seed);
    Graph tree = detail::random_tree_with(rng, n);
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : tree.adj[static_cast<std::size_t>(u)])
            if (u < v) {
                edge_set.emplace(u, v);
                edges.emplace_back(u, v);
            }
    while (static_cast<std::int64_t>(edges.size()) < m) {
        int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!edge_set.emplace(u, v).second) continue;
        edges.emplace_back(u, v);
    }
    return make_graph(n, edges);
}

/// Deterministic spider of exact order n: about sqrt(n-1) legs of near-equal
/// length.
inline Graph spider_of_order(int n) {
    if (n < 1) throw std::invalid_argument("spider_of_order: n must be positive");
    if (n == 1) return make_graph(1, {});
    const int total = n - 1;
    int legs = static_cast<int>(isqrt_u64(static_cast<std::uint64_t>(total)));
    if (legs < 1) legs = 1;
    const int base = total / legs, extra = total % legs;
    std::vector<int> lens;
    for (int i = 0; i < legs; ++i) lens.push_back(base + (i < extra ? 1 : 0));
    return gen_spider(lens);
}

/// Deterministic caterpillar of exact order n: spine of ceil(n/2), leaves
/// distributed round-robin.
inline Graph caterpillar_of_order(int n) {
    if (n < 1) throw std::invalid_argument("caterpillar_of_order: n must be positive");
    if (n == 1) return make_graph(1, {});
    const int spine = (n + 1) / 2;
    std::vector<int> legs(static_cast<std::size_t>(spine), 0);
    for (int i = 0; i < n - spine; ++i) ++legs[static_cast<std::size_t>(i % spine)];
    return gen_caterpillar(spine, legs);
}

} // namespace burn

#endif // BURN_GEN_HPP

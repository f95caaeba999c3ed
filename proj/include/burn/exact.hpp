#ifndef BURN_EXACT_HPP
#define BURN_EXACT_HPP

#include "burn/graph.hpp"
#include "burn/schedule.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace burn {

struct ExactResult {
    int number = 0;
    BurnSchedule witness;
};

namespace detail {

/// Depth-first search over source choices for one target length k.
/// State is the burned-vertex bitmask before the round's spread. Branches
/// are pruned when the vertices out of pure spreading reach cannot fit in
/// the largest balls the remaining sources could still cover, and failed
/// (round, burned-set) states are memoized.
class BurnSearch {
  public:
    BurnSearch(const Graph& g, const std::vector<std::uint64_t>& adj_mask,
               const std::vector<int>& max_ball)
        : g_(g), adj_mask_(adj_mask), max_ball_(max_ball),
          full_(g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1) {}

    bool run(int k) {
        k_ = k;
        chosen_.assign(static_cast<std::size_t>(k), -1);
        failed_.clear();
        cap_.assign(static_cast<std::size_t>(k) + 2, 0);
        // cap_[t] = largest vertex count the sources of rounds t..k can cover
        for (int t = k; t >= 1; --t) {
            const int r = std::min(k - t, g_.n);
            cap_[static_cast<std::size_t>(t)] =
                cap_[static_cast<std::size_t>(t) + 1] + max_ball_[static_cast<std::size_t>(r)];
        }
        return dfs(1, 0);
    }

    int completion() const { return completion_; }
    const std::vector<int>& chosen() const { return chosen_; }

  private:
    std::uint64_t spread_once(std::uint64_t mask) const {
        std::uint64_t acc = mask;
        std::uint64_t rest = mask;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            acc |= adj_mask_[static_cast<std::size_t>(v)];
        }
        return acc;
    }

    bool dfs(int t, std::uint64_t burned) {
        if (burned == full_) {
            completion_ = t - 1;
            return true;
        }
        if (t > k_) return false;

        const std::uint64_t after_spread = spread_once(burned);
        if (after_spread == full_) {
            completion_ = t;
            return true;
        }

        std::uint64_t reach = after_spread;
        for (int i = t; i < k_ && reach != full_; ++i) reach = spread_once(reach);
        const int out_of_reach = std::popcount(full_ & ~reach);
        if (out_of_reach > cap_[static_cast<std::size_t>(t)]) return false;

        const std::uint64_t key = (burned << 6) | static_cast<std::uint64_t>(t);
        if (failed_.count(key)) return false;

        std::uint64_t candidates = full_ & ~after_spread;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (dfs(t + 1, after_spread | (std::uint64_t{1} << v))) {
                chosen_[static_cast<std::size_t>(t) - 1] = v;
                return true;
            }
        }
        failed_.insert(key);
        return false;
    }

    const Graph& g_;
    const std::vector<std::uint64_t>& adj_mask_;
    const std::vector<int>& max_ball_;
    std::uint64_t full_;
    int k_ = 0;
    int completion_ = 0;
    std::vector<int> chosen_;
    std::vector<int> cap_;
    std::unordered_set<std::uint64_t> failed_;
};

} // namespace detail

/// Exact burning number by iterative deepening over the schedule length.
/// Returns the least k <= max_k admitting a complete burn together with one
/// witness schedule, or nullopt when max_k is exceeded. Exponential search;
/// intended for n up to about 20 (hard cap 32).
inline std::optional<ExactResult> exact_burning_number(const Graph& g, int max_k) {
    if (!is_connected(g)) throw NotConnectedError("exact_burning_number: graph is not connected");
    if (g.n > 32) throw std::invalid_argument("exact_burning_number: more than 32 vertices");
    if (max_k < 1) throw std::invalid_argument("exact_burning_number: max_k must be positive");

    std::vector<std::uint64_t> adj_mask(static_cast<std::size_t>(g.n), 0);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            adj_mask[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;

    // max_ball[r] = largest closed ball of radius r, capped at n
    std::vector<int> max_ball(static_cast<std::size_t>(g.n) + 1, 0);
    for (int s = 0; s < g.n; ++s) {
        const auto dist = bfs_distances(g, s);
        std::vector<int> count(static_cast<std::size_t>(g.n) + 1, 0);
        for (int d : dist) ++count[static_cast<std::size_t>(d)];
        int ball = 0;
        for (int r = 0; r <= g.n; ++r) {
            if (r < g.n) ball += count[static_cast<std::size_t>(r)];
            max_ball[static_cast<std::size_t>(r)] = std::max(max_ball[static_cast<std::size_t>(r)], ball);
        }
    }

    detail::BurnSearch search(g, adj_mask, max_ball);
    // One source per round burns any connected graph within n rounds, so
    // deepening past n cannot help.
    const int k_cap = std::min(max_k, g.n);
    for (int k = 1; k <= k_cap; ++k) {
        if (!search.run(k)) continue;
        ExactResult res;
        res.number = k;
        res.witness.rounds = k;
        for (int t = 1; t <= k; ++t) {
            const int v = search.chosen()[static_cast<std::size_t>(t) - 1];
            if (v >= 0) res.witness.sources[t] = v;
        }
        return res;
    }
    return std::nullopt;
}

struct CoverBall {
    int radius;
    int center;
};

struct CoverResult {
    bool covered = false;
    std::vector<CoverBall> balls; // radii descending
};

namespace detail {

class TreeCoverSearch {
  public:
    TreeCoverSearch(int n, const std::vector<std::vector<std::uint64_t>>& ball,
                    const std::vector<int>& cap_prefix)
        : n_(n), ball_(ball), cap_prefix_(cap_prefix) {}

    bool run(int k, std::uint64_t full) {
        balls_.clear();
        failed_.clear();
        return dfs(k - 1, full);
    }

    const std::vector<CoverBall>& balls() const { return balls_; }

  private:
    bool dfs(int r, std::uint64_t uncovered) {
        if (uncovered == 0) return true;
        if (r < 0) return false;
        if (cap_prefix_[static_cast<std::size_t>(r)] < std::popcount(uncovered)) return false;
        const std::uint64_t key = (uncovered << 6) | static_cast<std::uint64_t>(r + 1);
        if (failed_.count(key)) return false;
        for (int v = 0; v < n_; ++v) {
            const std::uint64_t nu = uncovered & ~ball_[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
            if (nu == uncovered) continue; // useless placement
            if (dfs(r - 1, nu)) {
                balls_.push_back(CoverBall{r, v});
                return true;
            }
        }
        if (dfs(r - 1, uncovered)) return true; // leave radius r unused
        failed_.insert(key);
        return false;
    }

    int n_;
    const std::vector<std::vector<std::uint64_t>>& ball_;
    const std::vector<int>& cap_prefix_;
    std::vector<CoverBall> balls_;
    std::unordered_set<std::uint64_t> failed_;
};

} // namespace detail

/// Exhaustive check whether k balls of radii k-1,...,0 (each optional) cover
/// the tree in its own metric. For trees this is equivalent to burnability in
/// k rounds; the toolkit uses it as a cross-validation oracle.
inline CoverResult tree_cover_check(const Graph& tree, int k) {
    if (!is_tree(tree)) throw std::invalid_argument("tree_cover_check: input is not a tree");
    if (tree.n > 32) throw std::invalid_argument("tree_cover_check: more than 32 vertices");
    if (k < 1 || k > 62) throw std::invalid_argument("tree_cover_check: k out of range");

    const int n = tree.n;
    std::vector<std::vector<std::uint64_t>> ball(
        static_cast<std::size_t>(n), std::vector<std::uint64_t>(static_cast<std::size_t>(k), 0));
    std::vector<int> max_ball(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(tree, v);
        for (int r = 0; r < k; ++r) {
            std::uint64_t m = 0;
            for (int u = 0; u < n; ++u)
                if (dist[static_cast<std::size_t>(u)] <= r) m |= std::uint64_t{1} << u;
            ball[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)] = m;
            max_ball[static_cast<std::size_t>(r)] =
                std::max(max_ball[static_cast<std::size_t>(r)], std::popcount(m));
        }
    }
    std::vector<int> cap_prefix(static_cast<std::size_t>(k), 0);
    for (int r = 0; r < k; ++r)
        cap_prefix[static_cast<std::size_t>(r)] =
            (r ? cap_prefix[static_cast<std::size_t>(r) - 1] : 0) + max_ball[static_cast<std::size_t>(r)];

    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    detail::TreeCoverSearch search(n, ball, cap_prefix);
    CoverResult res;
    res.covered = search.run(k, full);
    if (res.covered) {
        res.balls = search.balls();
        std::sort(res.balls.begin(), res.balls.end(),
                  [](const CoverBall& a, const CoverBall& b) { return a.radius > b.radius; });
    }
    return res;
}

} // namespace burn

#endif // BURN_EXACT_HPP

#ifndef BURN_DECOMPOSE_HPP
#define BURN_DECOMPOSE_HPP

#include "burn/bounds.hpp"
#include "burn/rooted_tree.hpp"
#include "burn/schedule.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace burn {

enum class CaseTag { WholeTree, Case1, Case2a, Case2b };

inline const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::WholeTree: return "WHOLE_TREE";
        case CaseTag::Case1: return "CASE1";
        case CaseTag::Case2a: return "CASE2A";
        case CaseTag::Case2b: return "CASE2B";
    }
    return "?";
}

/// The remaining radii, a strictly increasing set of non-negative integers.
/// Starts as {0,...,k-1}; each extraction consumes exactly one element.
class RadiusSet {
  public:
    static RadiusSet initial(int k) {
        if (k < 1) throw std::invalid_argument("RadiusSet: k must be positive");
        std::vector<int> v(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i;
        return RadiusSet(std::move(v));
    }

    explicit RadiusSet(std::vector<int> values) : values_(std::move(values)) {
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (values_[i] < 0) throw std::invalid_argument("RadiusSet: negative radius");
            if (i > 0 && values_[i] <= values_[i - 1])
                throw std::invalid_argument("RadiusSet: values must be strictly increasing");
        }
    }

    bool empty() const { return values_.empty(); }
    int size() const { return static_cast<int>(values_.size()); }

    int max() const {
        if (values_.empty()) throw std::invalid_argument("RadiusSet: empty");
        return values_.back();
    }

    bool contains(int r) const { return std::binary_search(values_.begin(), values_.end(), r); }

    void consume(int r) {
        auto it = std::lower_bound(values_.begin(), values_.end(), r);
        if (it == values_.end() || *it != r)
            throw std::invalid_argument("RadiusSet: consuming absent radius");
        values_.erase(it);
    }

    const std::vector<int>& values() const { return values_; }

  private:
    std::vector<int> values_;
};

/// One extraction: at loop counter j a subtree (the piece) is cut off at the
/// attach vertex, tagged with the consumed radius r*. The guarantees asserted
/// per extraction are
///   radius of the piece <= r*, and
///   |piece| >= r* + floor(j/2) - 3 unless the extraction is terminal
/// (terminal = the whole remaining tree was taken because the max-radius
/// ancestor did not exist; the size guarantee is waived there).
struct Extraction {
    int j = 0;
    CaseTag tag = CaseTag::WholeTree;
    int r_star = 0;
    int attach = 0; // p, the root of the removed subtree
    int center = 0;
    std::vector<int> piece;
    int measured_radius = 0;    // eccentricity of center within the piece
    std::optional<int> m;       // |subtree(v)| - max(R), present for CASE2A/CASE2B

    int size() const { return static_cast<int>(piece.size()); }
    bool terminal() const { return tag == CaseTag::WholeTree; }
};

/// Trace line, stable field order.
inline std::string format_extraction(const Extraction& e) {
    std::ostringstream ss;
    ss << "j=" << e.j << " case=" << to_string(e.tag) << " r*=" << e.r_star << " p=" << e.attach
       << " center=" << e.center << " size=" << e.size() << " radius=" << e.measured_radius;
    return ss.str();
}

struct Decomposition {
    int k = 0;
    int n = 0; // order of the decomposed tree
    std::vector<Extraction> extractions;

    int covered() const {
        int total = 0;
        for (const auto& e : extractions) total += e.size();
        return total;
    }
    bool covers() const { return covered() == n; }
};

/// Smallest r in R satisfying, in doubled integer arithmetic,
///   j + 2m <= 2r <= 2*max(R) - j + 2m + 6.
/// Such an r exists whenever 1 <= 2m < j and |R| >= j: at most
/// floor((j+2m+1)/2) elements sit below the window and at most
/// ceil((j-2m)/2) - 3 above it, which leaves at least two inside.
inline int select_radius(const RadiusSet& R, int j, int m) {
    if (R.empty()) throw std::invalid_argument("select_radius: empty radius set");
    if (m < 1 || 2 * m >= j) throw std::invalid_argument("select_radius: need 1 <= 2m < j");
    if (R.size() < j) throw std::invalid_argument("select_radius: radius set smaller than j");
    const int two_rmax = 2 * R.max();
    for (int r : R.values()) {
        if (j + 2 * m <= 2 * r && 2 * r <= two_rmax - j + 2 * m + 6) return r;
    }
    std::ostringstream ss;
    ss << "select_radius: no admissible radius for j=" << j << " m=" << m << " R={";
    for (std::size_t i = 0; i < R.values().size(); ++i)
        ss << (i ? "," : "") << R.values()[i];
    ss << "}";
    throw InternalError(ss.str());
}

struct PieceShape {
    int center = 0;
    int radius = 0;
    int diameter = 0;
};

namespace detail {

/// Center and radius of a detached piece, using the parent links the piece
/// kept from the rooted tree. Double BFS finds a diametral path; the center
/// is its midpoint; a third BFS measures the center's eccentricity.
/// Ties break toward the smallest vertex id throughout.
inline PieceShape piece_shape(const std::vector<int>& piece, const RootedTree& t, int attach) {
    const int s = static_cast<int>(piece.size());
    detail::require_internal(s >= 1, "piece_shape: empty piece");
    if (s == 1) return PieceShape{piece[0], 0, 0};

    std::vector<int> ids(piece);
    std::sort(ids.begin(), ids.end());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(s));
    for (int v : ids) {
        if (v == attach) continue;
        const int u = t.parent[static_cast<std::size_t>(v)];
        adj[static_cast<std::size_t>(local(u))].push_back(local(v));
        adj[static_cast<std::size_t>(local(v))].push_back(local(u));
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    std::vector<int> dist(static_cast<std::size_t>(s)), par(static_cast<std::size_t>(s));
    auto bfs = [&](int start) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(start)] = 0;
        q.push(start);
        int far = start;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(far)]) far = u;
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    par[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                }
            }
        }
        return far;
    };

    const int a = bfs(local(attach));
    const int b = bfs(a);
    const int diameter = dist[static_cast<std::size_t>(b)];
    int c = b;
    for (int i = 0; i < diameter / 2; ++i) c = par[static_cast<std::size_t>(c)];
    const int center = ids[static_cast<std::size_t>(c)];
    bfs(c);
    int radius = 0;
    for (int d : dist) radius = std::max(radius, d);
    return PieceShape{center, radius, diameter};
}

[[noreturn]] inline void extraction_fail(const Extraction& e, const std::string& what) {
    throw InternalError("extraction check failed (" + what + "): " + format_extraction(e));
}

inline void finish_extraction(Extraction& e, RootedTree& t, bool size_guarantee) {
    e.piece = detach_subtree(t, e.attach);
    const PieceShape shape = detail::piece_shape(e.piece, t, e.attach);
    e.center = shape.center;
    e.measured_radius = shape.radius;
    if (e.measured_radius > e.r_star) extraction_fail(e, "piece radius exceeds r*");
    if (size_guarantee && e.size() < e.r_star + e.j / 2 - 3)
        extraction_fail(e, "piece smaller than r* + j/2 - 3");
}

} // namespace detail

/// One iteration of the extraction loop at counter j. Picks the radius r*
/// and attach vertex p, detaches the piece, measures it, and checks the
/// per-extraction guarantees. Mutates t; the caller consumes r* from R.
///
/// Let u be the deepest alive vertex and r_max = max(R).
///   - If u is not r_max deep, the whole remaining tree is one piece
///     (terminal; r* = r_max).
///   - Otherwise v = the r_max-th ancestor of u. If subtree(v) has at least
///     r_max + floor(j/2) vertices, take it with r* = r_max (CASE1).
///   - Otherwise m = |subtree(v)| - r_max satisfies 1 <= m < floor(j/2);
///     pick r* = select_radius(R, j, m). Take subtree(v) when
///     2r* > 2r_max - j (CASE2A); otherwise take the subtree at the
///     (r* + floor(j/2))-th ancestor of u (CASE2B).
inline Extraction extract_step(RootedTree& t, const RadiusSet& R, int j) {
    if (t.empty()) throw std::invalid_argument("extract_step: empty tree");
    if (R.empty()) throw std::invalid_argument("extract_step: empty radius set");
    if (j < 0) throw std::invalid_argument("extract_step: negative loop counter");

    const int u = deepest_vertex(t);
    const int r_max = R.max();

    Extraction e;
    e.j = j;

    if (t.depth[static_cast<std::size_t>(u)] < r_max) {
        e.tag = CaseTag::WholeTree;
        e.r_star = r_max;
        e.attach = t.root;
        detail::finish_extraction(e, t, /*size_guarantee=*/false);
        return e;
    }

    const int v = *ancestor_at(t, u, r_max);
    const int sub_size = static_cast<int>(subtree_vertices(t, v).size());

    if (sub_size >= r_max + j / 2) {
        e.tag = CaseTag::Case1;
        e.r_star = r_max;
        e.attach = v;
        detail::finish_extraction(e, t, /*size_guarantee=*/true);
        return e;
    }

    const int m = sub_size - r_max;
    e.m = m;
    // The path from u up to v alone has r_max + 1 vertices, so m >= 1; and
    // sub_size < r_max + floor(j/2) forces 2m < j, which also means this
    // branch is unreachable for j <= 3.
    detail::require_internal(m >= 1, "extract_step: subtree smaller than its spine");
    detail::require_internal(2 * m < j, "extract_step: case 2 entered with 2m >= j");

    e.r_star = select_radius(R, j, m);
    if (2 * e.r_star > 2 * r_max - j) {
        e.tag = CaseTag::Case2a;
        e.attach = v;
    } else {
        e.tag = CaseTag::Case2b;
        const int h = e.r_star + j / 2;
        detail::require_internal(h <= r_max, "extract_step: ancestor height exceeds r_max");
        e.attach = *ancestor_at(t, u, h);
    }
    detail::finish_extraction(e, t, /*size_guarantee=*/true);
    return e;
}

/// Runs the extraction loop j = k-1 down to 0 until the tree is empty.
/// When k >= burning_bound(n) the extractions are guaranteed (and asserted)
/// to cover the whole tree; smaller k may leave vertices behind, reported
/// via Decomposition::covers().
inline Decomposition decompose_tree(RootedTree& t, int k) {
    if (k < 1) throw std::invalid_argument("decompose_tree: k must be positive");
    const int n0 = t.alive_count;
    if (n0 < 1) throw std::invalid_argument("decompose_tree: empty tree");

    RadiusSet radii = RadiusSet::initial(k);
    Decomposition d;
    d.k = k;
    d.n = n0;
    for (int j = k - 1; j >= 0 && !t.empty(); --j) {
        Extraction e = extract_step(t, radii, j);
        radii.consume(e.r_star);
        d.extractions.push_back(std::move(e));
    }
    if (k >= burning_bound(n0))
        detail::require_internal(t.empty(), "decompose_tree: tree not covered at guaranteed k");
    return d;
}

/// The elementary baseline: always consume the largest remaining radius r and
/// cut at the r-th ancestor of the deepest vertex (whole tree if absent).
/// Non-terminal pieces have at least r+1 vertices, so k rounds cover any
/// tree of order up to k(k+1)/2.
inline Decomposition elementary_decompose(RootedTree& t, int k) {
    if (k < 1) throw std::invalid_argument("elementary_decompose: k must be positive");
    const int n0 = t.alive_count;
    if (n0 < 1) throw std::invalid_argument("elementary_decompose: empty tree");

    RadiusSet radii = RadiusSet::initial(k);
    Decomposition d;
    d.k = k;
    d.n = n0;
    for (int j = k - 1; j >= 0 && !t.empty(); --j) {
        const int r = radii.max();
        const int u = deepest_vertex(t);
        Extraction e;
        e.j = j;
        e.r_star = r;
        const auto anc = ancestor_at(t, u, r);
        e.tag = anc ? CaseTag::Case1 : CaseTag::WholeTree;
        e.attach = anc ? *anc : t.root;
        e.piece = detach_subtree(t, e.attach);
        const PieceShape shape = detail::piece_shape(e.piece, t, e.attach);
        e.center = shape.center;
        e.measured_radius = shape.radius;
        if (e.measured_radius > e.r_star) detail::extraction_fail(e, "piece radius exceeds r*");
        if (anc && e.size() < r + 1) detail::extraction_fail(e, "piece smaller than r + 1");
        radii.consume(r);
        d.extractions.push_back(std::move(e));
    }
    if (static_cast<std::int64_t>(k) * (k + 1) / 2 >= n0)
        detail::require_internal(t.empty(), "elementary_decompose: tree not covered at guaranteed k");
    return d;
}

/// Schedule realizing a covering decomposition: the piece that consumed
/// radius r is burned by lighting its center in round k - r.
inline BurnSchedule schedule_from(const Decomposition& d) {
    if (!d.covers()) throw std::invalid_argument("schedule_from: decomposition does not cover the tree");
    BurnSchedule s;
    s.rounds = d.k;
    std::set<int> sources_seen;
    for (const auto& e : d.extractions) {
        const int round = d.k - e.r_star;
        detail::require_internal(round >= 1 && round <= d.k, "schedule_from: round out of range");
        detail::require_internal(!s.sources.count(round), "schedule_from: duplicate round");
        detail::require_internal(sources_seen.insert(e.center).second, "schedule_from: duplicate source");
        s.sources[round] = e.center;
    }
    return s;
}

struct BurnResult {
    int k = 0;
    Graph tree; // the spanning tree the decomposition ran on
    Decomposition decomposition;
    BurnSchedule schedule;
};

/// Decomposes a tree at k = burning_bound(n) and derives the schedule.
inline BurnResult burn_tree(const Graph& tree, int root = 0) {
    if (!is_tree(tree)) throw std::invalid_argument("burn_tree: input is not a tree");
    RootedTree t = root_tree(tree, root);
    BurnResult r;
    r.k = burning_bound(tree.n);
    r.tree = tree;
    r.decomposition = decompose_tree(t, r.k);
    r.schedule = schedule_from(r.decomposition);
    return r;
}

/// Reduction for arbitrary connected graphs: burn a BFS spanning tree; by the
/// time the tree is burned, so is the graph.
inline BurnResult burn_graph(const Graph& g, int root = 0) {
    SpanningTree st = spanning_tree(g, root); // throws NotConnectedError
    BurnResult r;
    r.k = burning_bound(g.n);
    r.tree = std::move(st.tree);
    r.decomposition = decompose_tree(st.rooted, r.k);
    r.schedule = schedule_from(r.decomposition);
    return r;
}

} // namespace burn

#endif // BURN_DECOMPOSE_HPP

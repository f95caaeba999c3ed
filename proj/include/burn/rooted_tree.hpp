#ifndef BURN_ROOTED_TREE_HPP
#define BURN_ROOTED_TREE_HPP

#include "burn/graph.hpp"

#include <optional>
#include <vector>

namespace burn {

/// A rooted tree with subtree removal. Vertices are flagged dead instead of
/// being physically removed; only whole subtrees hanging below surviving
/// vertices are ever detached, so parent and depth values of survivors stay
/// valid across any sequence of detachments.
struct RootedTree {
    int root = 0;
    std::vector<int> parent;                // -1 at the root
    std::vector<std::vector<int>> children; // ascending id order
    std::vector<int> depth;
    std::vector<char> alive;
    int alive_count = 0;

    int size() const { return alive_count; }
    bool empty() const { return alive_count == 0; }
    bool is_alive(int v) const { return alive[static_cast<std::size_t>(v)] != 0; }
};

struct SpanningTree {
    Graph tree;
    RootedTree rooted;
};

/// BFS spanning tree of a connected graph, rooted at `root`. Neighbors are
/// explored in ascending id order, which pins the tree and all downstream
/// tie-breaks deterministically.
inline SpanningTree spanning_tree(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw std::invalid_argument("spanning_tree: root out of range");
    RootedTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(g.n), -1);
    t.children.assign(static_cast<std::size_t>(g.n), {});
    t.depth.assign(static_cast<std::size_t>(g.n), -1);
    t.alive.assign(static_cast<std::size_t>(g.n), 1);
    t.alive_count = g.n;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.n) - 1);
    std::queue<int> q;
    t.depth[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    int visited = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (t.depth[static_cast<std::size_t>(v)] != -1) continue;
            t.depth[static_cast<std::size_t>(v)] = t.depth[static_cast<std::size_t>(u)] + 1;
            t.parent[static_cast<std::size_t>(v)] = u;
            t.children[static_cast<std::size_t>(u)].push_back(v);
            edges.emplace_back(u, v);
            q.push(v);
            ++visited;
        }
    }
    if (visited != g.n) throw NotConnectedError("spanning_tree: graph is not connected");
    return SpanningTree{make_graph(g.n, edges), std::move(t)};
}

/// Roots an existing tree (validated) at `root`.
inline RootedTree root_tree(const Graph& tree, int root) {
    if (!is_tree(tree)) throw std::invalid_argument("root_tree: input is not a tree");
    return spanning_tree(tree, root).rooted;
}

/// Alive vertex of maximum depth; ties broken by smallest id. Rescans all
/// vertices, which keeps subtree surgery O(1).
inline int deepest_vertex(const RootedTree& t) {
    if (t.empty()) throw std::invalid_argument("deepest_vertex: tree is empty");
    int best = -1, best_depth = -1;
    const int n = static_cast<int>(t.parent.size());
    for (int v = 0; v < n; ++v) {
        if (t.is_alive(v) && t.depth[static_cast<std::size_t>(v)] > best_depth) {
            best = v;
            best_depth = t.depth[static_cast<std::size_t>(v)];
        }
    }
    return best;
}

/// The ancestor exactly `dist` parent-hops above u, or nullopt when u is not
/// deep enough. All ancestors of an alive vertex are alive.
inline std::optional<int> ancestor_at(const RootedTree& t, int u, int dist) {
    if (!t.is_alive(u)) throw std::invalid_argument("ancestor_at: vertex is not alive");
    if (dist < 0) throw std::invalid_argument("ancestor_at: negative distance");
    if (t.depth[static_cast<std::size_t>(u)] < dist) return std::nullopt;
    int v = u;
    for (int i = 0; i < dist; ++i) v = t.parent[static_cast<std::size_t>(v)];
    return v;
}

/// All alive descendants of p, including p, in preorder.
inline std::vector<int> subtree_vertices(const RootedTree& t, int p) {
    if (!t.is_alive(p)) throw std::invalid_argument("subtree_vertices: vertex is not alive");
    std::vector<int> out;
    std::vector<int> stack{p};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        out.push_back(v);
        for (int c : t.children[static_cast<std::size_t>(v)])
            if (t.is_alive(c)) stack.push_back(c);
    }
    return out;
}

/// Removes the subtree rooted at p and returns its vertices. Survivors keep
/// their parent, children, and depth values.
inline std::vector<int> detach_subtree(RootedTree& t, int p) {
    std::vector<int> piece = subtree_vertices(t, p);
    for (int v : piece) t.alive[static_cast<std::size_t>(v)] = 0;
    t.alive_count -= static_cast<int>(piece.size());
    return piece;
}

} // namespace burn

#endif // BURN_ROOTED_TREE_HPP

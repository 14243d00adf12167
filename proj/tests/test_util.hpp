// Shared fixtures and independent brute-force oracles for the test suites.
// These deliberately avoid the library's traversal machinery: connectivity is
// answered by union-find over the edge list, articulation by deletion plus
// component counting, and path optima by exhaustive simple-path enumeration.
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "logpath/enumerate.hpp"
#include "logpath/graph.hpp"
#include "logpath/reference.hpp"

namespace logpath::test {

inline Graph p3() { return Graph::build(3, {{1, 2, 1}, {2, 3, 1}}); }
inline Graph k3() { return Graph::build(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}); }
inline Graph bowtie() {
    return Graph::build(5, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
}
inline Graph two_triangles_bridge() {
    // Triangles {1,2,3} and {6,7,8} joined by the bridge (3,6); 4 and 5 isolated.
    return Graph::build(
        8, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {6, 7, 1}, {7, 8, 1}, {6, 8, 1}, {3, 6, 1}});
}
inline Graph p3_plus_isolated() { return Graph::build(4, {{1, 2, 1}, {2, 3, 1}}); }

inline Graph path_graph(Vertex n, Weight w = 1) {
    std::vector<EdgeSpec> edges;
    for (Vertex v = 1; v < n; ++v) edges.push_back({v, v + 1, w});
    return Graph::build(n, edges);
}

/// m bridge arms out of center 1, each ending in a triangle:
/// 1 - a_i, triangle (a_i, b_i, c_i). Vertices: 1 + 3m.
inline Graph star_of_triangle_arms(int m) {
    std::vector<EdgeSpec> edges;
    Vertex next = 2;
    for (int i = 0; i < m; ++i) {
        Vertex a = next, b = next + 1, c = next + 2;
        next += 3;
        edges.push_back({1, a, 1});
        edges.push_back({a, b, 1});
        edges.push_back({b, c, 1});
        edges.push_back({a, c, 1});
    }
    return Graph::build(next - 1, edges);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
        for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

/// Connectivity over the view by union-find on the surviving edge list.
inline bool union_find_connected(const GraphView& view, Vertex a, Vertex b) {
    UnionFind uf(view.order());
    for (Vertex u = 1; u <= view.order(); ++u) {
        if (!view.alive(u)) continue;
        for (const Edge& e : view.base().neighbors(u))
            if (view.alive(e.to)) uf.unite(u, e.to);
    }
    return uf.find(a) == uf.find(b);
}

inline int components_without(const Graph& g, Vertex removed) {
    UnionFind uf(g.order());
    for (Vertex u = 1; u <= g.order(); ++u) {
        if (u == removed) continue;
        for (const Edge& e : g.neighbors(u))
            if (e.to != removed && e.to > u) uf.unite(u, e.to);
    }
    int comps = 0;
    for (Vertex u = 1; u <= g.order(); ++u)
        if (u != removed && uf.find(u) == u) ++comps;
    return comps;
}

/// Deletion-based articulation test: removing v splits its component.
inline bool brute_is_articulation(const Graph& g, Vertex v) {
    if (g.degree(v) == 0) return false;
    return components_without(g, v) > component_count(g);
}

/// Minimum weight over simple s-t paths by exhaustive backtracking; nullopt if
/// t is unreachable.
inline std::optional<Weight> brute_min_path(const Graph& g, Vertex s, Vertex t) {
    std::optional<Weight> best;
    std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
    auto dfs = [&](auto&& self, Vertex u, Weight acc) -> void {
        if (u == t) {
            if (!best || acc < *best) best = acc;
            return;
        }
        used[static_cast<std::size_t>(u)] = 1;
        for (const Edge& e : g.neighbors(u))
            if (!used[static_cast<std::size_t>(e.to)]) self(self, e.to, acc + e.weight);
        used[static_cast<std::size_t>(u)] = 0;
    };
    dfs(dfs, s, 0);
    return best;
}

/// Minimum weight over simple cycles (length >= 3), by anchored backtracking.
inline std::optional<Weight> brute_min_cycle(const Graph& g) {
    std::optional<Weight> best;
    std::vector<char> used(static_cast<std::size_t>(g.order()) + 1, 0);
    for (Vertex anchor = 1; anchor <= g.order(); ++anchor) {
        auto dfs = [&](auto&& self, Vertex u, Weight acc, int length) -> void {
            used[static_cast<std::size_t>(u)] = 1;
            for (const Edge& e : g.neighbors(u)) {
                if (e.to == anchor && length >= 3) {
                    if (!best || acc + e.weight < *best) best = acc + e.weight;
                } else if (e.to > anchor && !used[static_cast<std::size_t>(e.to)]) {
                    self(self, e.to, acc + e.weight, length + 1);
                }
            }
            used[static_cast<std::size_t>(u)] = 0;
        };
        dfs(dfs, anchor, 0, 1);
    }
    return best;
}

/// Vertex set of the component of G - (block(v, p) \ {p}) containing p, with
/// the block taken from the reference decomposition.
inline std::vector<Vertex> brute_subgraph_vertices(const Graph& g, const BlockDecomposition& dec,
                                                   Vertex v, Vertex p) {
    int block = dec.block_with(v, p);
    if (block < 0) throw GraphError("brute_subgraph_vertices: not co-block");
    const auto& members = dec.blocks[static_cast<std::size_t>(block)];
    auto removed = [&](Vertex x) {
        return x != p && std::binary_search(members.begin(), members.end(), x);
    };
    std::vector<Vertex> out{p};
    std::vector<char> seen(static_cast<std::size_t>(g.order()) + 1, 0);
    seen[static_cast<std::size_t>(p)] = 1;
    std::vector<Vertex> stack{p};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const Edge& e : g.neighbors(u)) {
            if (removed(e.to) || seen[static_cast<std::size_t>(e.to)]) continue;
            seen[static_cast<std::size_t>(e.to)] = 1;
            out.push_back(e.to);
            stack.push_back(e.to);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace logpath::test

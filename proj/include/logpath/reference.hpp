// reference.hpp - unmetered exact baselines: Hopcroft-Tarjan block
// decomposition and a full-graph shortest-path reference. These stand in for
// the cited black-box subroutines and anchor the test suites; their internals
// are exempt from metering, only the invocation is tallied.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "logpath/graph.hpp"
#include "logpath/metering.hpp"

namespace logpath {

struct NegativeCycleError : std::runtime_error {
    explicit NegativeCycleError(const std::string& what) : std::runtime_error(what) {}
};

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;   // vertex sets, each sorted ascending
    std::vector<Vertex> articulation_points;   // sorted ascending

    bool is_articulation(Vertex v) const {
        return std::binary_search(articulation_points.begin(), articulation_points.end(), v);
    }

    bool block_contains(int block, Vertex v) const {
        const auto& b = blocks[static_cast<std::size_t>(block)];
        return std::binary_search(b.begin(), b.end(), v);
    }

    /// Index of the block containing both u and v, or -1. Blocks share at most
    /// one vertex, so the answer is unique.
    int block_with(Vertex u, Vertex v) const {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (block_contains(static_cast<int>(i), u) && block_contains(static_cast<int>(i), v))
                return static_cast<int>(i);
        return -1;
    }

    std::vector<int> blocks_of(Vertex v) const {
        std::vector<int> out;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (block_contains(static_cast<int>(i), v)) out.push_back(static_cast<int>(i));
        return out;
    }

    int max_block_size() const {
        std::size_t m = 0;
        for (const auto& b : blocks) m = std::max(m, b.size());
        return static_cast<int>(m);
    }
};

/// Hopcroft-Tarjan biconnected components over a view, iterative DFS with an
/// edge stack. `vertices` restricts the search to a sublist of alive labels
/// (used for ball-local decompositions); empty means all alive vertices.
/// Arrays are sized by the restricted vertex count, not the base order.
inline BlockDecomposition biconnected_components(const GraphView& view, Meter* meter = nullptr,
                                                 std::span<const Vertex> vertices = {}) {
    if (meter) meter->count_oracle("hopcroft_tarjan");
    SuspendGuard guard(meter);

    std::vector<Vertex> verts;
    if (vertices.empty()) {
        for (Vertex v = 1; v <= view.order(); ++v)
            if (view.alive(v)) verts.push_back(v);
    } else {
        verts.assign(vertices.begin(), vertices.end());
        std::sort(verts.begin(), verts.end());
    }
    const int m = static_cast<int>(verts.size());
    auto local = [&](Vertex v) -> int {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(it - verts.begin());
    };

    std::vector<int> disc(static_cast<std::size_t>(m), 0), low(static_cast<std::size_t>(m), 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    BlockDecomposition out;
    std::vector<Vertex> art;

    struct Frame {
        Vertex v;
        int vi;
        Vertex parent;
        int j;  // next adjacency index, 1-based
        bool parent_skipped;
        int children;
    };
    std::vector<Frame> stack;
    int timer = 0;

    auto pop_block = [&](Vertex u, Vertex w) {
        std::vector<Vertex> members;
        while (!edge_stack.empty()) {
            auto [a, b] = edge_stack.back();
            edge_stack.pop_back();
            members.push_back(a);
            members.push_back(b);
            if (a == u && b == w) break;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.blocks.push_back(std::move(members));
    };

    for (Vertex root : verts) {
        int ri = local(root);
        if (disc[static_cast<std::size_t>(ri)] != 0) continue;
        disc[static_cast<std::size_t>(ri)] = low[static_cast<std::size_t>(ri)] = ++timer;
        stack.push_back({root, ri, 0, 1, false, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto nbrs = view.base().neighbors(f.v);
            bool descended = false;
            while (f.j <= static_cast<int>(nbrs.size())) {
                const Edge& e = nbrs[static_cast<std::size_t>(f.j - 1)];
                ++f.j;
                if (!view.alive(e.to)) continue;
                int wi = local(e.to);
                if (wi < 0) continue;  // neighbor outside the restricted list
                if (e.to == f.parent && !f.parent_skipped) {
                    f.parent_skipped = true;
                    continue;
                }
                if (disc[static_cast<std::size_t>(wi)] == 0) {
                    edge_stack.emplace_back(f.v, e.to);
                    disc[static_cast<std::size_t>(wi)] = low[static_cast<std::size_t>(wi)] =
                        ++timer;
                    ++f.children;
                    stack.push_back({e.to, wi, f.v, 1, false, 0});
                    descended = true;
                    break;
                }
                if (disc[static_cast<std::size_t>(wi)] < disc[static_cast<std::size_t>(f.vi)]) {
                    edge_stack.emplace_back(f.v, e.to);
                    low[static_cast<std::size_t>(f.vi)] = std::min(
                        low[static_cast<std::size_t>(f.vi)], disc[static_cast<std::size_t>(wi)]);
                }
            }
            if (descended) continue;
            Frame finished = stack.back();
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                low[static_cast<std::size_t>(p.vi)] =
                    std::min(low[static_cast<std::size_t>(p.vi)],
                             low[static_cast<std::size_t>(finished.vi)]);
                if (low[static_cast<std::size_t>(finished.vi)] >=
                    disc[static_cast<std::size_t>(p.vi)]) {
                    pop_block(p.v, finished.v);
                    bool is_root = stack.size() == 1;
                    if (!is_root || p.children >= 2) art.push_back(p.v);
                }
            }
        }
    }

    std::sort(art.begin(), art.end());
    art.erase(std::unique(art.begin(), art.end()), art.end());
    out.articulation_points = std::move(art);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                  return std::pair(a.back(), a.front()) < std::pair(b.back(), b.front());
              });
    return out;
}

inline BlockDecomposition biconnected_components(const Graph& g, Meter* meter = nullptr) {
    GraphView view(g);
    return biconnected_components(view, meter);
}

enum class PathStatus { found, unreachable, negative_cycle };

struct ReferencePath {
    PathStatus status = PathStatus::unreachable;
    std::vector<Vertex> path;
    Weight distance = 0;
};

namespace detail {

inline constexpr int kExactSearchLimit = 18;
inline constexpr Weight kInfWeight = std::numeric_limits<Weight>::max() / 4;

inline std::vector<Vertex> alive_vertices(const GraphView& view) {
    std::vector<Vertex> verts;
    for (Vertex v = 1; v <= view.order(); ++v)
        if (view.alive(v)) verts.push_back(v);
    return verts;
}

inline std::vector<Vertex> component_of(const GraphView& view, Vertex s) {
    std::vector<Vertex> comp{s};
    std::vector<char> seen(static_cast<std::size_t>(view.order()) + 1, 0);
    seen[static_cast<std::size_t>(s)] = 1;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const Edge& e : view.base().neighbors(u)) {
            if (!view.alive(e.to) || seen[static_cast<std::size_t>(e.to)]) continue;
            seen[static_cast<std::size_t>(e.to)] = 1;
            comp.push_back(e.to);
            stack.push_back(e.to);
        }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

// Textbook Bellman-Ford over the view, valid for nonnegative weights (walk and
// simple-path optima coincide there).
inline ReferencePath bellman_ford_nonnegative(const GraphView& view,
                                              const std::vector<Vertex>& verts, Vertex s,
                                              Vertex t) {
    const Vertex n = view.order();
    std::vector<Weight> dist(static_cast<std::size_t>(n) + 1, kInfWeight);
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    dist[static_cast<std::size_t>(s)] = 0;
    const std::size_t rounds = verts.empty() ? 0 : verts.size() - 1;
    for (std::size_t round = 0; round < rounds; ++round) {
        bool changed = false;
        for (Vertex u : verts) {
            if (dist[static_cast<std::size_t>(u)] >= kInfWeight) continue;
            for (const Edge& e : view.base().neighbors(u)) {
                if (!view.alive(e.to)) continue;
                Weight cand = dist[static_cast<std::size_t>(u)] + e.weight;
                if (cand < dist[static_cast<std::size_t>(e.to)]) {
                    dist[static_cast<std::size_t>(e.to)] = cand;
                    parent[static_cast<std::size_t>(e.to)] = u;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    if (dist[static_cast<std::size_t>(t)] >= kInfWeight) return {PathStatus::unreachable, {}, 0};
    ReferencePath out;
    out.status = PathStatus::found;
    out.distance = dist[static_cast<std::size_t>(t)];
    for (Vertex v = t; v != s; v = parent[static_cast<std::size_t>(v)]) out.path.push_back(v);
    out.path.push_back(s);
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

// Exact minimum-weight simple path by subset DP, used when negative edges are
// present (walk-based relaxation diverges on any negative undirected edge).
// Restricted to the component of s; the component size is capped.
inline ReferencePath exact_simple_path(const GraphView& view, const std::vector<Vertex>& comp,
                                       Vertex s, Vertex t) {
    const int m = static_cast<int>(comp.size());
    if (m > kExactSearchLimit)
        throw GraphError("negative-weight search on a component of " + std::to_string(m) +
                         " vertices exceeds the exact-search budget of " +
                         std::to_string(kExactSearchLimit));
    auto local = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
    };
    // Local weighted adjacency.
    std::vector<std::vector<std::pair<int, Weight>>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (const Edge& e : view.base().neighbors(comp[static_cast<std::size_t>(i)]))
            if (view.alive(e.to)) adj[static_cast<std::size_t>(i)].emplace_back(local(e.to), e.weight);

    const int si = local(s), ti = local(t);
    const std::size_t masks = std::size_t{1} << m;
    std::vector<Weight> dp(masks * static_cast<std::size_t>(m), kInfWeight);
    std::vector<int> prev(masks * static_cast<std::size_t>(m), -1);
    auto at = [&](std::size_t mask, int v) -> std::size_t {
        return mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(v);
    };
    dp[at(std::size_t{1} << si, si)] = 0;
    Weight best = kInfWeight;
    std::size_t best_mask = 0;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        if (!(mask & (std::size_t{1} << si))) continue;
        for (int v = 0; v < m; ++v) {
            if (!(mask & (std::size_t{1} << v))) continue;
            Weight d = dp[at(mask, v)];
            if (d >= kInfWeight) continue;
            if (v == ti && d < best) {
                best = d;
                best_mask = mask;
            }
            for (auto [w, wt] : adj[static_cast<std::size_t>(v)]) {
                if (mask & (std::size_t{1} << w)) continue;
                std::size_t nmask = mask | (std::size_t{1} << w);
                if (d + wt < dp[at(nmask, w)]) {
                    dp[at(nmask, w)] = d + wt;
                    prev[at(nmask, w)] = v;
                }
            }
        }
    }
    if (best >= kInfWeight) return {PathStatus::unreachable, {}, 0};
    ReferencePath out;
    out.status = PathStatus::found;
    out.distance = best;
    std::size_t mask = best_mask;
    int v = ti;
    while (v != -1) {
        out.path.push_back(comp[static_cast<std::size_t>(v)]);
        int p = prev[at(mask, v)];
        mask &= ~(std::size_t{1} << v);
        v = p;
    }
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

/// Minimum weight over simple cycles (length >= 3) within the given vertex
/// list, by anchored subset DP.
inline Weight min_simple_cycle(const GraphView& view, const std::vector<Vertex>& comp) {
    const int m = static_cast<int>(comp.size());
    if (m > kExactSearchLimit)
        throw GraphError("negative-cycle scan on a component of " + std::to_string(m) +
                         " vertices exceeds the exact-search budget");
    auto local = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
    };
    std::vector<std::vector<std::pair<int, Weight>>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (const Edge& e : view.base().neighbors(comp[static_cast<std::size_t>(i)]))
            if (view.alive(e.to)) adj[static_cast<std::size_t>(i)].emplace_back(local(e.to), e.weight);

    Weight best = kInfWeight;
    // Anchor a = smallest local index on the cycle; masks range over {a..m-1}.
    for (int a = 0; a < m; ++a) {
        const int width = m - a;
        if (width < 3) break;
        const std::size_t masks = std::size_t{1} << width;
        std::vector<Weight> dp(masks * static_cast<std::size_t>(width), kInfWeight);
        auto at = [&](std::size_t mask, int v) -> std::size_t {
            return mask * static_cast<std::size_t>(width) + static_cast<std::size_t>(v - a);
        };
        dp[at(1, a)] = 0;
        for (std::size_t mask = 1; mask < masks; ++mask) {
            if (!(mask & 1)) continue;  // anchor always in mask
            for (int v = a; v < m; ++v) {
                if (!(mask & (std::size_t{1} << (v - a)))) continue;
                Weight d = dp[at(mask, v)];
                if (d >= kInfWeight) continue;
                for (auto [w, wt] : adj[static_cast<std::size_t>(v)]) {
                    if (w < a) continue;
                    if (w == a) {
                        if (std::popcount(mask) >= 3 && d + wt < best) best = d + wt;
                        continue;
                    }
                    std::size_t bit = std::size_t{1} << (w - a);
                    if (mask & bit) continue;
                    if (d + wt < dp[at(mask | bit, w)]) dp[at(mask | bit, w)] = d + wt;
                }
            }
        }
    }
    return best;
}

inline bool has_negative_edge(const GraphView& view, const std::vector<Vertex>& verts) {
    for (Vertex u : verts)
        for (const Edge& e : view.base().neighbors(u))
            if (view.alive(e.to) && e.weight < 0) return true;
    return false;
}

}  // namespace detail

/// Exact minimum-weight simple path between s and t in the view, with one
/// witness path. Reports negative_cycle when the s-t component contains a
/// negative-weight simple cycle. Nonnegative instances run through
/// Bellman-Ford; instances with negative edges run through an exact
/// subset-DP search (bounded component size).
inline ReferencePath reference_shortest_path(const GraphView& view, Vertex s, Vertex t,
                                             Meter* meter = nullptr) {
    if (!view.alive(s) || !view.alive(t))
        throw GraphError("shortest path endpoint not in the view");
    if (meter) meter->count_oracle("bellman_ford");
    SuspendGuard guard(meter);

    if (s == t) return {PathStatus::found, {s}, 0};
    std::vector<Vertex> comp = detail::component_of(view, s);
    if (!std::binary_search(comp.begin(), comp.end(), t)) return {PathStatus::unreachable, {}, 0};
    if (!detail::has_negative_edge(view, comp))
        return detail::bellman_ford_nonnegative(view, comp, s, t);
    if (detail::min_simple_cycle(view, comp) < 0) return {PathStatus::negative_cycle, {}, 0};
    return detail::exact_simple_path(view, comp, s, t);
}

inline ReferencePath reference_shortest_path(const Graph& g, Vertex s, Vertex t,
                                             Meter* meter = nullptr) {
    GraphView view(g);
    return reference_shortest_path(view, s, t, meter);
}

/// Confirms endpoints and consecutive adjacency; returns the summed weight.
inline Weight validate_path(const Graph& g, std::span<const Vertex> path, Vertex s, Vertex t) {
    if (path.empty()) throw GraphError("empty path");
    if (path.front() != s || path.back() != t)
        throw GraphError("path endpoints do not match the query");
    Weight total = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!g.has_edge(path[i - 1], path[i]))
            throw GraphError("path vertices " + std::to_string(path[i - 1]) + " and " +
                             std::to_string(path[i]) + " are not adjacent");
        total += g.edge_weight(path[i - 1], path[i]);
    }
    return total;
}

}  // namespace logpath

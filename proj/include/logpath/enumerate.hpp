// enumerate.hpp - exhaustive enumeration of small labeled graphs, used by the
// verification suites.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "logpath/graph.hpp"

namespace logpath {

inline int component_count(const Graph& g) {
    const Vertex n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> stack;
    int comps = 0;
    for (Vertex s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (const Edge& e : g.neighbors(u)) {
                if (seen[static_cast<std::size_t>(e.to)]) continue;
                seen[static_cast<std::size_t>(e.to)] = 1;
                stack.push_back(e.to);
            }
        }
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

inline std::vector<std::pair<Vertex, Vertex>> vertex_pairs(Vertex n) {
    std::vector<std::pair<Vertex, Vertex>> slots;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
    return slots;
}

inline std::int64_t graph_mask_count(Vertex n) {
    return std::int64_t{1} << (n * (n - 1) / 2);
}

/// The graph on n labeled vertices selected by an edge bitmask over the
/// (u < v) slots in lexicographic order, unit weights.
inline Graph graph_from_mask(Vertex n, std::int64_t mask, Weight unit_weight = 1) {
    std::vector<EdgeSpec> edges;
    int bit = 0;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v, ++bit)
            if (mask & (std::int64_t{1} << bit)) edges.push_back({u, v, unit_weight});
    return Graph::build(n, edges);
}

}  // namespace logpath

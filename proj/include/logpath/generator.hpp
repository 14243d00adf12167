// generator.hpp - deterministic generator for connected graphs with bounded
// degree and bounded block size: grow a random block tree by attaching cycle,
// clique or bridge blocks at vertices with spare degree. Weights are uniform
// in 1..9.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logpath/graph.hpp"
#include "logpath/local_blocks.hpp"
#include "logpath/rng.hpp"

namespace logpath {

inline Graph generate_bounded(Vertex n, const BoundedParams& params, std::uint64_t seed) {
    if (n < 1) throw BoundsError("generator needs at least one vertex");
    if (params.delta < 1 || params.k < 2)
        throw BoundsError("generator needs delta >= 1 and k >= 2");
    if (n > 2 && params.delta < 2)
        throw BoundsError("delta 1 cannot grow past two vertices");

    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
    std::vector<EdgeSpec> edges;
    std::vector<int> spare(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> open;  // vertices with spare degree, lazily compacted
    int positive_spares = 0;   // exact count of vertices with spare >= 1
    Vertex cur = 1;
    spare[1] = params.delta;
    if (params.delta > 0) {
        open.push_back(1);
        positive_spares = 1;
    }

    auto spend = [&](Vertex u, int amount) {
        if (spare[static_cast<std::size_t>(u)] > 0 &&
            spare[static_cast<std::size_t>(u)] - amount <= 0)
            --positive_spares;
        spare[static_cast<std::size_t>(u)] -= amount;
    };

    struct Move {
        int size;
        bool clique;
    };

    while (cur < n) {
        Vertex v = 0;
        while (!open.empty()) {
            std::size_t idx = rng.below(open.size());
            if (spare[static_cast<std::size_t>(open[idx])] > 0) {
                v = open[idx];
                break;
            }
            open[idx] = open.back();
            open.pop_back();
        }
        if (v == 0)
            throw BoundsError("generation stalled: no vertex with spare degree (n=" +
                              std::to_string(n) + ")");

        const int room = n - cur;
        const int sv = spare[static_cast<std::size_t>(v)];
        // A move is admissible when degree-feasible, within the block-size
        // bound, and it either finishes the graph or leaves some vertex with
        // spare degree to keep growing from.
        std::vector<Move> moves;
        auto consider = [&](int size, bool clique) {
            const int anchor_cost = size == 2 ? 1 : (clique ? size - 1 : 2);
            const int member_degree = size == 2 ? 1 : (clique ? size - 1 : 2);
            if (size - 1 > room || anchor_cost > sv || member_degree > params.delta) return;
            const int positives_after = (positive_spares - 1) +
                                        (sv - anchor_cost > 0 ? 1 : 0) +
                                        (params.delta - member_degree > 0 ? size - 1 : 0);
            if (cur + size - 1 < n && positives_after < 1) return;
            moves.push_back({size, clique});
        };
        consider(2, false);
        for (int c = 3; c <= params.k; ++c) {
            consider(c, false);          // cycle
            if (c >= 4) consider(c, true);  // clique, distinct from the cycle only at size 4+
        }
        if (moves.empty())
            throw BoundsError("generation stalled: no admissible block at vertex " +
                              std::to_string(v) + " (n=" + std::to_string(n) + ")");
        Move move = moves[rng.below(moves.size())];

        std::vector<Vertex> members{v};
        for (int i = 1; i < move.size; ++i) {
            Vertex fresh = ++cur;
            spare[static_cast<std::size_t>(fresh)] = params.delta;
            if (params.delta > 0) ++positive_spares;
            members.push_back(fresh);
            open.push_back(fresh);
        }
        auto add_edge = [&](Vertex a, Vertex b) {
            edges.push_back({a, b, static_cast<Weight>(rng.between(1, 9))});
            spend(a, 1);
            spend(b, 1);
        };
        if (move.size == 2) {
            add_edge(members[0], members[1]);
        } else if (move.clique) {
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    add_edge(members[i], members[j]);
        } else {
            for (std::size_t i = 0; i + 1 < members.size(); ++i)
                add_edge(members[i], members[i + 1]);
            add_edge(members.back(), members.front());
        }
    }
    return Graph::build(n, edges);
}

}  // namespace logpath

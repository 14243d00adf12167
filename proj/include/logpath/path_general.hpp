// path_general.hpp - block-at-a-time shortest path for arbitrary graphs: print
// the path one block at a time by locating t in a subgraph rooted at the
// current block, hopping articulation points until t's block is reached.
// In-block paths go through the path oracle over a membership view of the
// block, recomputed on demand.
#pragma once

#include <string>

#include "logpath/block_primitives.hpp"
#include "logpath/connectivity.hpp"
#include "logpath/graph.hpp"
#include "logpath/metering.hpp"
#include "logpath/path.hpp"

namespace logpath {

namespace detail {

inline GraphView block_membership_view(const Graph& g, const BlockPrimitives& bp, Vertex v1,
                                       Vertex v2, Meter* meter) {
    return GraphView::membership(
        g, [&bp, v1, v2](Vertex u) { return bp.is_in_block(v1, v2, u); }, meter);
}

}  // namespace detail

/// Shortest s-t path using the connectivity oracle and the in-block path
/// oracle. Emits s = p0 P0 p1 ... pl Pl t, the pi articulation points.
/// The in-block oracle defaults to the reference realization.
inline PathReport shortest_path_general(const Graph& g, Vertex s, Vertex t,
                                        ConnectivityOracle& conn, Meter* meter = nullptr,
                                        TraversalObserver* obs = nullptr,
                                        PathInBlockOracle* block_oracle = nullptr) {
    g.check_label(s);
    g.check_label(t);
    ReferencePathInBlock default_oracle;
    if (block_oracle == nullptr) block_oracle = &default_oracle;
    if (meter) meter->set_input_size(g.order());
    PathEmitter emitter(g);
    if (s == t) {
        emitter.emit(s);
        return {true, emitter.take(), 0};
    }

    BlockPrimitives bp(g, conn, meter);
    // 10 words: current plus the loop and candidate registers below.
    RegisterScope regs = meter ? meter->alloc(10) : RegisterScope();

    GraphView full(g, meter);
    if (!conn.connected(full, s, t, meter)) return {false, {}, 0};

    Vertex current = s;
    std::int64_t hop_cap = static_cast<std::int64_t>(g.order()) + 1;
    for (;;) {
        charge(meter, StepKind::reg_write);
        if (bp.are_in_block(current, t)) {
            GraphView block = detail::block_membership_view(g, bp, current, t, meter);
            if (obs) obs->hop(current, t, bp.block_id(current, t));
            block_oracle->emit_path(block, current, t, emitter, meter);
            Weight w = emitter.total_weight();
            return {true, emitter.take(), w};
        }

        bool advanced = false;
        charge(meter, StepKind::adj_access);
        const int d = g.degree(current);
        for (int i = 1; i <= d && !advanced; ++i) {
            charge(meter, StepKind::adj_access);
            const Vertex neighbor = g.adj(current, i).to;
            for (Vertex potential = 1; potential <= g.order(); ++potential) {
                charge(meter, StepKind::reg_write);
                if (potential == current) continue;
                if (!bp.is_in_block(current, neighbor, potential)) continue;
                if (!bp.is_articulation(potential)) continue;
                if (!is_in_subgraph(bp, current, potential, t, obs)) continue;
                GraphView block =
                    detail::block_membership_view(g, bp, current, potential, meter);
                if (obs) obs->hop(current, potential, bp.block_id(current, potential));
                block_oracle->emit_path(block, current, potential, emitter, meter);
                current = potential;
                charge(meter, StepKind::reg_write);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw InvariantError("no candidate articulation point found at vertex " +
                                 std::to_string(current) + " while target " + std::to_string(t) +
                                 " is unreached");
        if (--hop_cap < 0) throw InvariantError("articulation hop count exceeded vertex count");
    }
}

}  // namespace logpath

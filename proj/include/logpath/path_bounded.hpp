// path_bounded.hpp - linear-time constant-register shortest path for graphs
// with bounded degree and bounded block size. Candidate articulation points
// come from ball-local block discovery; the winning candidate is picked by two
// subtour cursors advanced alternately in one thread, so the work spent on the
// winner is matched by work on losers.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logpath/block_primitives.hpp"
#include "logpath/graph.hpp"
#include "logpath/local_blocks.hpp"
#include "logpath/metering.hpp"
#include "logpath/path.hpp"

namespace logpath {

/// Picks the candidate articulation point p with t in subgraph(current, p).
/// Two cursors tour candidate subgraphs in strict alternation, one block-step
/// per turn; an exhausted cursor reseeds on the next unexplored candidate.
/// Once every candidate but one is ruled out, the remaining one is returned
/// without further traversal.
inline Vertex twin_cursor_search(const LocalBlockOracle& ops_a, const LocalBlockOracle& ops_b,
                                 Vertex current, std::span<const Vertex> candidates, Vertex t,
                                 TraversalObserver* obs = nullptr) {
    const std::size_t m = candidates.size();
    if (m == 0) throw InvariantError("twin cursor search with no candidates");
    Meter* meter = ops_a.meter();

    std::size_t done = 0;
    std::size_t next_seed = 0;
    using Cursor = TraversalCursor<LocalBlockOracle>;
    std::optional<Cursor> cursors[2];
    const LocalBlockOracle* ops[2] = {&ops_a, &ops_b};

    auto undone_candidate = [&]() -> Vertex {
        // Exactly one candidate is not ruled out; it is whichever cursor is
        // still unfinished, or the next unseeded candidate.
        for (int c = 0; c < 2; ++c)
            if (cursors[c] && !cursors[c]->finished()) return cursors[c]->candidate();
        return candidates[next_seed];
    };

    auto seed = [&](int c) {
        cursors[c].emplace(*ops[c], current, candidates[next_seed], obs);
        ++next_seed;
        charge(meter, StepKind::reg_write);
    };

    if (m - done == 1) return undone_candidate();
    seed(0);
    if (next_seed < m) seed(1);

    std::int64_t cap =
        8 * static_cast<std::int64_t>(ops_a.graph().order()) + 16 * static_cast<std::int64_t>(m) + 16;
    for (;;) {
        for (int c = 0; c < 2; ++c) {
            if (!cursors[c] || cursors[c]->finished()) continue;
            auto step = cursors[c]->advance(*ops[c], t, obs);
            charge(meter, StepKind::reg_write);
            if (step == Cursor::Step::found) {
                if (obs) obs->tour_finished(cursors[c]->candidate(), true);
                return cursors[c]->candidate();
            }
            if (step == Cursor::Step::exhausted) {
                if (obs) obs->tour_finished(cursors[c]->candidate(), false);
                ++done;
                if (m - done == 1) return undone_candidate();
                if (next_seed < m) seed(c);
            }
        }
        if (--cap < 0)
            throw InvariantError("twin cursor search exceeded its step bound locating " +
                                 std::to_string(t));
    }
}

/// Shortest s-t path for a graph satisfying the declared degree and block-size
/// bounds: component gate by full Euler subtour, then block-at-a-time emission
/// with candidates from adjacent_points(previous, current) and selection by
/// the twin cursor search. Per-block paths run on materialized keep-set views
/// of at most k vertices.
inline PathReport shortest_path_bounded(const Graph& g, Vertex s, Vertex t,
                                        const BoundedParams& params, Meter* meter = nullptr,
                                        TraversalObserver* obs = nullptr) {
    g.check_label(s);
    g.check_label(t);
    if (meter) meter->set_input_size(g.order());
    PathEmitter emitter(g);
    if (s == t) {
        emitter.emit(s);
        return {true, emitter.take(), 0};
    }

    LocalBlockOracle main_ops(g, params, meter);
    LocalBlockOracle cursor_ops_a(g, params, meter);
    LocalBlockOracle cursor_ops_b(g, params, meter);
    // Engine registers: previous, current and the candidate buffer.
    const std::int64_t candidate_cap =
        static_cast<std::int64_t>(params.delta) * params.k + 8;
    RegisterScope regs = meter ? meter->alloc(candidate_cap) : RegisterScope();
    std::vector<Vertex> candidates;
    candidates.reserve(static_cast<std::size_t>(candidate_cap));

    if (!traverse_component(main_ops, s, t, obs)) return {false, {}, 0};

    Vertex previous = s;
    Vertex current = s;
    charge(meter, StepKind::reg_write);
    charge(meter, StepKind::reg_write);
    std::int64_t hop_cap = static_cast<std::int64_t>(g.order()) + 1;
    for (;;) {
        if (main_ops.are_in_block(current, t)) {
            const auto local = main_ops.blocks_containing(current);
            const std::vector<Vertex>* block = nullptr;
            for (const auto& b : *local.blocks)
                if (std::binary_search(b.begin(), b.end(), t)) block = &b;
            if (block == nullptr)
                throw InvariantError("are_in_block(current, t) held but no block was found");
            if (obs) obs->hop(current, t, BlockId{block->back(), block->front()});
            GraphView view = GraphView::keep_set(g, *block, meter);
            path_in_block(view, current, t, emitter, meter);
            Weight w = emitter.total_weight();
            return {true, emitter.take(), w};
        }

        main_ops.adjacent_points(previous, current, candidates);
        std::erase(candidates, current);
        if (obs) obs->candidate_list(previous, current, candidates);
        if (candidates.empty())
            throw InvariantError("no candidate articulation points at vertex " +
                                 std::to_string(current) + " while target " + std::to_string(t) +
                                 " is unreached");
        Vertex chosen =
            twin_cursor_search(cursor_ops_a, cursor_ops_b, current, candidates, t, obs);

        const auto& block = [&]() -> const std::vector<Vertex>& {
            const auto local = main_ops.blocks_containing(current);
            for (const auto& b : *local.blocks)
                if (std::binary_search(b.begin(), b.end(), chosen)) return b;
            throw InvariantError("chosen candidate " + std::to_string(chosen) +
                                 " shares no block with " + std::to_string(current));
        }();
        if (obs) obs->hop(current, chosen, BlockId{block.back(), block.front()});
        GraphView view = GraphView::keep_set(g, block, meter);
        path_in_block(view, current, chosen, emitter, meter);
        previous = current;
        current = chosen;
        charge(meter, StepKind::reg_write);
        charge(meter, StepKind::reg_write);
        if (--hop_cap < 0) throw InvariantError("articulation hop count exceeded vertex count");
    }
}

}  // namespace logpath

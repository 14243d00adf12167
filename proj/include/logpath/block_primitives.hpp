// block_primitives.hpp - block membership, articulation detection, block ids,
// next-articulation / next-block stepping and the Euler subtour traversal, all
// built on the connectivity oracle with a constant register file.
//
// Blocks are named by id (largest, smallest vertex label), compared
// lexicographically. Lists are never stored: the next-selection folds a
// cyclic-successor choice over elements generated one at a time.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "logpath/connectivity.hpp"
#include "logpath/graph.hpp"
#include "logpath/metering.hpp"

namespace logpath {

struct InvariantError : std::runtime_error {
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct BlockId {
    Vertex largest = 0;
    Vertex smallest = 0;
    auto operator<=>(const BlockId&) const = default;

    std::string str() const {
        return "(" + std::to_string(largest) + "," + std::to_string(smallest) + ")";
    }
};

/// Cyclic-successor choice between a1 and a2 relative to p: prefers the
/// smallest value strictly greater than p, wrapping to the smallest overall.
template <typename T>
T next_after(T a1, T a2, T p) {
    if ((a2 <= p && p < a1) || (p < a1 && a1 <= a2) || (a1 <= a2 && a2 <= p)) return a1;
    return a2;
}

/// Cyclic successor of p in a re-generable sequence, by folding next_after
/// with constant state. Errors on an empty sequence.
template <typename Range, typename T>
T next_in_list(Range&& range, T p) {
    bool any = false;
    T best{};
    for (const T& x : range) {
        if (!any) {
            best = x;
            any = true;
        } else {
            best = next_after(best, x, p);
        }
    }
    if (!any) throw GraphError("next_in_list on an empty sequence");
    return best;
}

/// Test-side hook observing traversal structure; production callers pass null.
struct TraversalObserver {
    virtual ~TraversalObserver() = default;
    virtual void tour_started(Vertex /*current*/, Vertex /*candidate*/, BlockId /*root*/) {}
    virtual void block_entered(BlockId /*id*/) {}
    virtual void block_step() {}
    virtual void tour_finished(Vertex /*candidate*/, bool /*found*/) {}
    virtual void hop(Vertex /*from*/, Vertex /*to*/, BlockId /*block*/) {}
    virtual void candidate_list(Vertex /*previous*/, Vertex /*current*/,
                                std::span<const Vertex> /*candidates*/) {}
};

/// The oracle-backed block machinery. One instance owns a fixed register file
/// (scratch for every operation plus one traversal cursor), so runs built on
/// it have a structurally constant high-water mark.
class BlockPrimitives {
  public:
    // 12 scratch words shared by the scan loops plus 8 words reserved for the
    // subtour cursor this instance can drive.
    static constexpr std::int64_t kRegisterWords = 20;

    BlockPrimitives(const Graph& g, ConnectivityOracle& conn, Meter* meter = nullptr)
        : g_(g), conn_(conn), meter_(meter) {
        if (meter_) regs_ = meter_->alloc(kRegisterWords);
    }

    const Graph& graph() const { return g_; }
    Meter* meter() const { return meter_; }
    ConnectivityOracle& oracle() const { return conn_; }

    /// True iff v lies in block(v1, v2). Caller guarantees v1 != v2 co-block.
    bool is_in_block(Vertex v1, Vertex v2, Vertex v) const {
        g_.check_label(v1);
        g_.check_label(v2);
        g_.check_label(v);
        if (debug_checks_enabled() && !are_in_block(v1, v2))
            throw InvariantError("is_in_block precondition: " + std::to_string(v1) + " and " +
                                 std::to_string(v2) + " are not co-block");
        if (v == v1 || v == v2) return true;
        const Vertex n = g_.order();
        for (Vertex i = 1; i <= n; ++i) {
            if (i == v1 || i == v) continue;
            charge(meter_, StepKind::reg_write);
            GraphView view = GraphView::without_vertex(g_, i, meter_);
            if (!conn_.connected(view, v1, v, meter_)) return false;
        }
        GraphView view = GraphView::without_vertex(g_, v1, meter_);
        return conn_.connected(view, v2, v, meter_);
    }

    /// True iff some block contains both u and v; u == v answers true.
    bool are_in_block(Vertex u, Vertex v) const {
        g_.check_label(u);
        g_.check_label(v);
        if (u == v) return true;
        GraphView full(g_, meter_);
        if (!conn_.connected(full, u, v, meter_)) return false;
        const Vertex n = g_.order();
        for (Vertex i = 1; i <= n; ++i) {
            if (i == u || i == v) continue;
            charge(meter_, StepKind::reg_write);
            GraphView view = GraphView::without_vertex(g_, i, meter_);
            if (!conn_.connected(view, u, v, meter_)) return false;
        }
        return true;
    }

    /// A vertex is an articulation point iff two of its neighbors are not in
    /// the same block; degree <= 1 answers false.
    bool is_articulation(Vertex v) const {
        charge(meter_, StepKind::adj_access);
        const int d = g_.degree(v);
        for (int i = 2; i <= d; ++i) {
            charge(meter_, StepKind::reg_write);
            charge(meter_, StepKind::adj_access);
            Vertex first = g_.adj(v, 1).to;
            charge(meter_, StepKind::adj_access);
            Vertex other = g_.adj(v, i).to;
            if (!is_in_block(v, first, other)) return true;
        }
        return false;
    }

    /// (largest, smallest) of block(v1, v2), one pass over the labels.
    BlockId block_id(Vertex v1, Vertex v2) const {
        BlockId id{0, 0};
        const Vertex n = g_.order();
        for (Vertex v = 1; v <= n; ++v) {
            charge(meter_, StepKind::reg_write);
            if (!is_in_block(v1, v2, v)) continue;
            if (id.largest == 0) id.smallest = v;  // first member of the ascending scan
            id.largest = v;
        }
        return id;
    }

    /// Cyclic next articulation point of block(v1, v2) after p; p itself when
    /// the block has no other articulation point to offer.
    Vertex next_articulation(Vertex v1, Vertex v2, Vertex p) const {
        Vertex a = p;
        const Vertex n = g_.order();
        for (Vertex v = 1; v <= n; ++v) {
            charge(meter_, StepKind::reg_write);
            if (is_in_block(v1, v2, v) && is_articulation(v)) a = next_after(a, v, p);
        }
        return a;
    }

    /// Neighbor u of p such that block(p, u) has the cyclic next id after
    /// id(v1, v2) among the blocks identified by p and each of its neighbors.
    /// On duplicate candidate ids the last scan index wins.
    Vertex next_block(Vertex v1, Vertex v2, Vertex p) const {
        charge(meter_, StepKind::adj_access);
        const int d = g_.degree(p);
        if (d == 0) throw GraphError("next_block at isolated vertex " + std::to_string(p));
        BlockId id_star = block_id(v1, v2);
        charge(meter_, StepKind::adj_access);
        BlockId a = block_id(p, g_.adj(p, 1).to);
        int i_star = 1;
        for (int i = 2; i <= d; ++i) {
            charge(meter_, StepKind::reg_write);
            charge(meter_, StepKind::adj_access);
            BlockId b = block_id(p, g_.adj(p, i).to);
            if ((a <= id_star && id_star < b) || (id_star < b && b <= a) ||
                (b <= a && a <= id_star)) {
                a = b;
                i_star = i;
            }
        }
        charge(meter_, StepKind::adj_access);
        return g_.adj(p, i_star).to;
    }

  private:
    const Graph& g_;
    ConnectivityOracle& conn_;
    Meter* meter_;
    RegisterScope regs_;
};

/// Euler subtour cursor: (v1, v2) name the current block, p the pivot in it.
/// Advancing moves to the next block at the next articulation point; the tour
/// is exhausted when the starting block id recurs. State is 8 words, reserved
/// in the owning ops' register file.
template <class Ops>
class TraversalCursor {
  public:
    enum class Step { running, found, exhausted };

    TraversalCursor(const Ops& ops, Vertex current, Vertex candidate,
                    TraversalObserver* obs = nullptr)
        : candidate_(candidate) {
        v1_ = candidate;
        v2_ = current;
        start_id_ = ops.block_id(v1_, v2_);
        charge(ops.meter(), StepKind::reg_write);
        v2_ = ops.next_block(v1_, v2_, candidate);
        p_ = candidate;
        step_cap_ = 4 * static_cast<std::int64_t>(ops.graph().order()) + 8;
        if (obs) {
            obs->tour_started(current, candidate, start_id_);
            obs->block_step();
        }
    }

    /// One block-step: exhaustion test, target test in the current block,
    /// then one next_articulation / next_block move.
    Step advance(const Ops& ops, Vertex t, TraversalObserver* obs = nullptr) {
        if (finished_) return Step::exhausted;
        BlockId here = ops.block_id(v1_, v2_);
        if (here == start_id_) {
            finished_ = true;
            return Step::exhausted;
        }
        if (obs) obs->block_entered(here);
        if (ops.is_in_block(v1_, v2_, t)) {
            finished_ = true;
            return Step::found;
        }
        charge(ops.meter(), StepKind::reg_write);
        p_ = ops.next_articulation(v1_, v2_, p_);
        Vertex vn = ops.next_block(v1_, v2_, p_);
        v1_ = p_;
        v2_ = vn;
        charge(ops.meter(), StepKind::reg_write);
        if (obs) obs->block_step();
        if (--step_cap_ < 0)
            throw InvariantError("subtour exceeded its step bound (cursor from candidate " +
                                 std::to_string(candidate_) + ")");
        return Step::running;
    }

    Vertex candidate() const { return candidate_; }
    BlockId start_id() const { return start_id_; }
    bool finished() const { return finished_; }

  private:
    Vertex v1_ = 0, v2_ = 0, p_ = 0;
    Vertex candidate_ = 0;
    BlockId start_id_{};
    bool finished_ = false;
    std::int64_t step_cap_ = 0;
};

/// True iff t lies in the component of G - (block(v, p) \ {p}) containing p:
/// the subgraph rooted at block(v, p) hanging off p. Requires v != p co-block.
template <class Ops>
bool is_in_subgraph(const Ops& ops, Vertex v, Vertex p, Vertex t,
                    TraversalObserver* obs = nullptr) {
    ops.graph().check_label(v);
    ops.graph().check_label(p);
    ops.graph().check_label(t);
    if (v == p) throw GraphError("is_in_subgraph requires v != p");
    if (t == p) {
        if (obs) {
            obs->tour_started(v, p, BlockId{});
            obs->tour_finished(p, true);
        }
        return true;
    }
    TraversalCursor<Ops> cursor(ops, v, p, obs);
    for (;;) {
        auto step = cursor.advance(ops, t, obs);
        if (step == TraversalCursor<Ops>::Step::found) {
            if (obs) obs->tour_finished(p, true);
            return true;
        }
        if (step == TraversalCursor<Ops>::Step::exhausted) {
            if (obs) obs->tour_finished(p, false);
            return false;
        }
    }
}

/// Full Euler subtour of the block tree of s's component; true iff t is
/// encountered. The seed state (pivot s) is transient when s is not an
/// articulation point, so the closing condition marks the first state after
/// one advance - a genuine directed edge (pivot, block) of the block tree,
/// which recurs exactly once per full Euler cycle.
template <class Ops>
bool traverse_component(const Ops& ops, Vertex s, Vertex t, TraversalObserver* obs = nullptr) {
    const Graph& g = ops.graph();
    g.check_label(s);
    g.check_label(t);
    if (s == t) return true;
    charge(ops.meter(), StepKind::adj_access);
    if (g.degree(s) == 0) return false;

    Vertex v1 = s;
    charge(ops.meter(), StepKind::adj_access);
    Vertex v2 = g.adj(s, 1).to;
    Vertex p = s;
    charge(ops.meter(), StepKind::reg_write);
    v2 = ops.next_block(v1, v2, s);
    BlockId here = ops.block_id(v1, v2);
    Vertex mark_pivot = 0;
    BlockId mark_id{};
    std::int64_t cap = 4 * static_cast<std::int64_t>(g.order()) + 8;
    for (;;) {
        if (obs) obs->block_entered(here);
        if (ops.is_in_block(v1, v2, t)) return true;
        charge(ops.meter(), StepKind::reg_write);
        p = ops.next_articulation(v1, v2, p);
        Vertex vn = ops.next_block(v1, v2, p);
        v1 = p;
        v2 = vn;
        charge(ops.meter(), StepKind::reg_write);
        if (obs) obs->block_step();
        here = ops.block_id(v1, v2);
        if (mark_pivot == 0) {
            mark_pivot = v1;
            mark_id = here;
        } else if (v1 == mark_pivot && here == mark_id) {
            return false;
        }
        if (--cap < 0) throw InvariantError("component tour exceeded its step bound");
    }
}

}  // namespace logpath

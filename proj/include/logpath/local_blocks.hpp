// local_blocks.hpp - ball-local block discovery for graphs with bounded degree
// and bounded block size. Every block containing v lies inside the radius-k
// ball around v, so a local Hopcroft-Tarjan pass over that ball answers the
// block queries with a constant number of registers and constant step count
// per query.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "logpath/block_primitives.hpp"
#include "logpath/graph.hpp"
#include "logpath/metering.hpp"
#include "logpath/reference.hpp"

namespace logpath {

struct BoundsError : std::runtime_error {
    explicit BoundsError(const std::string& what) : std::runtime_error(what) {}
};

/// Last element of a list under the pinned (ascending) candidate ordering.
template <typename T>
const T& last_of(std::span<const T> list) {
    if (list.empty()) throw GraphError("last_of on an empty list");
    return list.back();
}

template <typename T>
const T& last_of(const std::vector<T>& list) {
    return last_of(std::span<const T>(list));
}

struct BoundedParams {
    int delta = 0;  // maximum vertex degree
    int k = 0;      // maximum block size in vertices

    /// Size bound for a radius-k ball under max degree delta:
    /// sum of delta^i for i = 0..k, i.e. floor((delta^(k+1) - 1) / (delta - 1))
    /// when delta >= 2. Saturates instead of overflowing.
    std::int64_t ball_bound() const {
        if (delta < 1 || k < 0) throw BoundsError("bounded params require delta >= 1, k >= 0");
        constexpr std::int64_t cap = std::int64_t{1} << 40;
        std::int64_t total = 1, term = 1;
        for (int i = 1; i <= k; ++i) {
            term *= delta;
            total += term;
            if (total > cap) return cap;
        }
        return total;
    }
};

/// Load-time promise check: max degree <= delta and max block size <= k.
inline void validate_bounded(const Graph& g, const BoundedParams& p) {
    if (p.delta < 1 || p.k < 1) throw BoundsError("bounded params require delta >= 1, k >= 1");
    for (Vertex v = 1; v <= g.order(); ++v)
        if (g.degree(v) > p.delta)
            throw BoundsError("vertex " + std::to_string(v) + " has degree " +
                              std::to_string(g.degree(v)) + " > delta " + std::to_string(p.delta));
    BlockDecomposition dec = biconnected_components(g);
    for (const auto& b : dec.blocks)
        if (static_cast<int>(b.size()) > p.k)
            throw BoundsError("block (" + std::to_string(b.back()) + "," +
                              std::to_string(b.front()) + ") has " + std::to_string(b.size()) +
                              " vertices > k " + std::to_string(p.k));
}

/// Block queries answered from a cached blocksContaining result: the radius-k
/// ball around a pivot, decomposed by a local Hopcroft-Tarjan pass. Two pivot
/// slots are kept because the subtour cursor alternates between the block
/// anchor and the stepping pivot. Answers match the oracle-backed
/// BlockPrimitives for all arguments within the pivot's blocks.
class LocalBlockOracle {
  public:
    LocalBlockOracle(const Graph& g, const BoundedParams& params, Meter* meter = nullptr)
        : g_(g), params_(params), ball_bound_(params.ball_bound()), meter_(meter) {
        if (meter_) regs_ = meter_->alloc(register_words(params_));
    }

    /// Fixed register file: the ball buffer, two pivot caches (block members,
    /// block ids, articulation points, pivot label), one cursor reserve and
    /// scan scratch.
    static std::int64_t register_words(const BoundedParams& p) {
        const std::int64_t blocks_cap = static_cast<std::int64_t>(p.delta) * p.k;
        return p.ball_bound() + 2 * (blocks_cap + 2 * p.delta + blocks_cap + 1) + 8 + 12;
    }

    const Graph& graph() const { return g_; }
    Meter* meter() const { return meter_; }
    const BoundedParams& params() const { return params_; }

    struct LocalBlocks {
        const std::vector<std::vector<Vertex>>* blocks;  // sorted members, ordered by id
        const std::vector<BlockId>* ids;
        const std::vector<Vertex>* articulation_points;  // ascending
    };

    /// All blocks containing v plus the articulation points in those blocks.
    /// The result aliases a pivot slot and is valid until the second-next
    /// repivot.
    LocalBlocks blocks_containing(Vertex v) const {
        const Slot& s = ensure_pivot(v);
        return {&s.blocks, &s.ids, &s.arts};
    }

    bool is_articulation(Vertex v) const { return ensure_pivot(v).blocks.size() >= 2; }

    bool is_in_block(Vertex v1, Vertex v2, Vertex v) const {
        const auto& b = find_block(v1, v2);
        return std::binary_search(b.begin(), b.end(), v);
    }

    bool are_in_block(Vertex u, Vertex v) const {
        g_.check_label(u);
        g_.check_label(v);
        if (u == v) return true;
        const Slot& s = ensure_pivot(u);
        for (const auto& b : s.blocks) {
            charge(meter_, StepKind::reg_write);
            if (std::binary_search(b.begin(), b.end(), v)) return true;
        }
        return false;
    }

    BlockId block_id(Vertex v1, Vertex v2) const {
        const auto& b = find_block(v1, v2);
        return {b.back(), b.front()};
    }

    Vertex next_articulation(Vertex v1, Vertex v2, Vertex p) const {
        const auto& b = find_block(v1, v2);
        const Slot& s = ensure_pivot(v1);
        Vertex a = p;
        for (Vertex v : b) {
            charge(meter_, StepKind::reg_write);
            if (std::binary_search(s.arts.begin(), s.arts.end(), v)) a = next_after(a, v, p);
        }
        return a;
    }

    /// Same neighbor scan as the oracle-backed version, ids answered from the
    /// pivot cache of p.
    Vertex next_block(Vertex v1, Vertex v2, Vertex p) const {
        BlockId id_star = block_id(v1, v2);
        charge(meter_, StepKind::adj_access);
        const int d = g_.degree(p);
        if (d == 0) throw GraphError("next_block at isolated vertex " + std::to_string(p));
        charge(meter_, StepKind::adj_access);
        BlockId a = id_of_incident_block(p, g_.adj(p, 1).to);
        int i_star = 1;
        for (int i = 2; i <= d; ++i) {
            charge(meter_, StepKind::reg_write);
            charge(meter_, StepKind::adj_access);
            BlockId b = id_of_incident_block(p, g_.adj(p, i).to);
            if ((a <= id_star && id_star < b) || (id_star < b && b <= a) ||
                (b <= a && a <= id_star)) {
                a = b;
                i_star = i;
            }
        }
        charge(meter_, StepKind::adj_access);
        return g_.adj(p, i_star).to;
    }

    /// Articulation points in blocks containing v2 but not v1; for v1 == v2,
    /// articulation points in all blocks containing v2. Ascending order.
    void adjacent_points(Vertex v1, Vertex v2, std::vector<Vertex>& out) const {
        out.clear();
        const Slot& s = ensure_pivot(v2);
        if (v1 == v2) {
            out.assign(s.arts.begin(), s.arts.end());
            return;
        }
        for (const auto& b : s.blocks) {
            charge(meter_, StepKind::reg_write);
            if (std::binary_search(b.begin(), b.end(), v1)) continue;
            for (Vertex u : b)
                if (std::binary_search(s.arts.begin(), s.arts.end(), u)) out.push_back(u);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }

    std::vector<Vertex> adjacent_points(Vertex v1, Vertex v2) const {
        std::vector<Vertex> out;
        adjacent_points(v1, v2, out);
        return out;
    }

    // Ball-bound assertion bookkeeping (one check per ball collection).
    static std::int64_t ball_checks() { return s_ball_checks.load(); }
    static std::int64_t ball_violations() { return s_ball_violations.load(); }

  private:
    struct Slot {
        Vertex pivot = 0;
        std::vector<std::vector<Vertex>> blocks;
        std::vector<BlockId> ids;
        std::vector<Vertex> arts;
        std::uint64_t stamp = 0;
    };

    const std::vector<Vertex>& find_block(Vertex v1, Vertex v2) const {
        if (v1 == v2) throw GraphError("block(v,v) is not defined");
        const Slot& s = ensure_pivot(v1);
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            charge(meter_, StepKind::reg_write);
            if (std::binary_search(s.blocks[i].begin(), s.blocks[i].end(), v2))
                return s.blocks[i];
        }
        throw InvariantError("no block contains both " + std::to_string(v1) + " and " +
                             std::to_string(v2));
    }

    BlockId id_of_incident_block(Vertex p, Vertex neighbor) const {
        const Slot& s = ensure_pivot(p);
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            charge(meter_, StepKind::reg_write);
            if (std::binary_search(s.blocks[i].begin(), s.blocks[i].end(), neighbor))
                return s.ids[i];
        }
        throw InvariantError("no block at " + std::to_string(p) + " contains neighbor " +
                             std::to_string(neighbor));
    }

    // Returned slot references stay valid until the second-next repivot; the
    // two slots exist because the subtour cursor alternates between the block
    // anchor pivot and the stepping pivot. Callers must not repivot while
    // holding a slot reference other than through these two pivots.
    const Slot& ensure_pivot(Vertex v) const {
        g_.check_label(v);
        for (Slot& s : slots_)
            if (s.pivot == v) {
                s.stamp = ++stamp_;
                return s;
            }
        Slot& s = slots_[0].stamp <= slots_[1].stamp ? slots_[0] : slots_[1];
        rebuild(s, v);
        s.stamp = ++stamp_;
        return s;
    }

    void rebuild(Slot& s, Vertex v) const {
        s.pivot = v;
        s.blocks.clear();
        s.ids.clear();
        s.arts.clear();

        // Radius-k ball around v, breadth-first by rounds.
        ball_.clear();
        ball_.push_back(v);
        charge(meter_, StepKind::reg_write);
        std::size_t frontier_begin = 0;
        ++s_ball_checks;
        for (int round = 1; round <= params_.k; ++round) {
            const std::size_t frontier_end = ball_.size();
            for (std::size_t fi = frontier_begin; fi < frontier_end; ++fi) {
                Vertex u = ball_[fi];
                charge(meter_, StepKind::adj_access);
                for (const Edge& e : g_.neighbors(u)) {
                    charge(meter_, StepKind::adj_access);
                    if (std::find(ball_.begin(), ball_.end(), e.to) != ball_.end()) continue;
                    ball_.push_back(e.to);
                    charge(meter_, StepKind::reg_write);
                    if (static_cast<std::int64_t>(ball_.size()) > ball_bound_) {
                        ++s_ball_violations;
                        throw BoundsError("ball around " + std::to_string(v) + " exceeds " +
                                          std::to_string(ball_bound_) +
                                          " vertices: input violates the declared delta/k");
                    }
                }
            }
            frontier_begin = frontier_end;
        }
        std::sort(ball_.begin(), ball_.end());

        GraphView ball_view = GraphView::keep_set(g_, ball_, meter_);
        BlockDecomposition dec = biconnected_components(ball_view, meter_, ball_);

        for (const auto& b : dec.blocks) {
            if (!std::binary_search(b.begin(), b.end(), v)) continue;
            s.blocks.push_back(b);
            s.ids.push_back({b.back(), b.front()});
        }
        // Keep blocks ordered by id (decomposition order is already by id).
        for (const auto& b : s.blocks)
            for (Vertex u : b)
                if (dec.is_articulation(u)) s.arts.push_back(u);
        std::sort(s.arts.begin(), s.arts.end());
        s.arts.erase(std::unique(s.arts.begin(), s.arts.end()), s.arts.end());
    }

    const Graph& g_;
    BoundedParams params_;
    std::int64_t ball_bound_;
    Meter* meter_;
    RegisterScope regs_;
    mutable Slot slots_[2];
    mutable std::uint64_t stamp_ = 0;
    mutable std::vector<Vertex> ball_;

    static inline std::atomic<std::int64_t> s_ball_checks{0};
    static inline std::atomic<std::int64_t> s_ball_violations{0};
};

}  // namespace logpath

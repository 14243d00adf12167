// connectivity.hpp - the pluggable connected(H; v1, v2) oracle.
//
// Two implementations: an exact DFS reference (with a per-view component-label
// memo, since the block machinery probes the same delete-one views over and
// over), and a randomized random-walk oracle with one-sided error: "connected"
// answers are always right, "not connected" may be wrong.
#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "logpath/graph.hpp"
#include "logpath/metering.hpp"
#include "logpath/rng.hpp"

namespace logpath {

/// Simulates a budgeted random walk from v1; true iff v2 is hit. The walk
/// state is one vertex plus the step count.
inline bool random_walk_connected(const GraphView& view, Vertex v1, Vertex v2,
                                  std::int64_t budget, std::uint64_t seed) {
    if (budget < 1) throw GraphError("random walk budget must be at least 1");
    if (!view.alive(v1) || !view.alive(v2))
        throw GraphError("random walk endpoint not in the view");
    if (v1 == v2) return true;
    SplitMix64 rng(seed);
    Vertex cur = v1;
    for (std::int64_t step = 0; step < budget; ++step) {
        int d = view.degree(cur);
        if (d == 0) return false;
        cur = view.adj(cur, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)))).to;
        if (cur == v2) return true;
    }
    return false;
}

class ConnectivityOracle {
  public:
    virtual ~ConnectivityOracle() = default;

    /// True iff v1 and v2 are in the same component of the view. Charges one
    /// oracle call; the query itself runs as exempt oracle internals.
    bool connected(const GraphView& view, Vertex v1, Vertex v2, Meter* meter = nullptr) {
        if (!view.alive(v1))
            throw GraphError("connected: vertex " + std::to_string(v1) + " not in the view");
        if (!view.alive(v2))
            throw GraphError("connected: vertex " + std::to_string(v2) + " not in the view");
        if (meter) meter->count_oracle("connected");
        SuspendGuard guard(meter);
        return connected_impl(view, v1, v2);
    }

    bool connected(const Graph& g, Vertex v1, Vertex v2, Meter* meter = nullptr) {
        GraphView view(g, meter);
        return connected(view, v1, v2, meter);
    }

    virtual std::string name() const = 0;

  protected:
    virtual bool connected_impl(const GraphView& view, Vertex v1, Vertex v2) = 0;
};

/// Exact reference: component labeling by iterative DFS. Labelings of full and
/// delete-one views of one base graph are memoized; other view modes are
/// answered with a fresh traversal.
class DfsConnectivity final : public ConnectivityOracle {
  public:
    std::string name() const override { return "dfs"; }

  protected:
    bool connected_impl(const GraphView& view, Vertex v1, Vertex v2) override {
        if (view.mode() == GraphView::Mode::full || view.mode() == GraphView::Mode::delete_one) {
            const std::vector<Vertex>& labels = memoized_labels(view);
            return labels[static_cast<std::size_t>(v1)] == labels[static_cast<std::size_t>(v2)];
        }
        std::vector<Vertex> labels = label_components(view);
        return labels[static_cast<std::size_t>(v1)] == labels[static_cast<std::size_t>(v2)];
    }

  private:
    const std::vector<Vertex>& memoized_labels(const GraphView& view) {
        if (view.base().uid() != memo_uid_) {
            memo_uid_ = view.base().uid();
            memo_.assign(static_cast<std::size_t>(view.base().order()) + 1, {});
        }
        Vertex key = view.mode() == GraphView::Mode::full ? 0 : view.deleted_vertex();
        auto& slot = memo_[static_cast<std::size_t>(key)];
        if (slot.empty()) slot = label_components(view);
        return slot;
    }

    static std::vector<Vertex> label_components(const GraphView& view) {
        Vertex n = view.order();
        std::vector<Vertex> labels(static_cast<std::size_t>(n) + 1, 0);
        std::vector<Vertex> stack;
        Vertex next_label = 0;
        for (Vertex s = 1; s <= n; ++s) {
            if (!view.alive(s) || labels[static_cast<std::size_t>(s)] != 0) continue;
            ++next_label;
            labels[static_cast<std::size_t>(s)] = next_label;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex u = stack.back();
                stack.pop_back();
                for (const Edge& e : view.base().neighbors(u)) {
                    if (!view.alive(e.to) || labels[static_cast<std::size_t>(e.to)] != 0) continue;
                    labels[static_cast<std::size_t>(e.to)] = next_label;
                    stack.push_back(e.to);
                }
            }
        }
        return labels;
    }

    std::uint64_t memo_uid_ = 0;
    std::vector<std::vector<Vertex>> memo_;  // [deleted vertex, 0 = none] -> labels
};

/// Randomized oracle: one walk of ceil(budget_multiplier * n^3) steps per
/// query, seeds drawn deterministically from the base seed.
class RandomWalkConnectivity final : public ConnectivityOracle {
  public:
    explicit RandomWalkConnectivity(double budget_multiplier = 8.0, std::uint64_t seed = 1)
        : multiplier_(budget_multiplier), seed_(seed) {}

    std::string name() const override { return "walk"; }

    std::int64_t budget_for(Vertex n) const {
        double b = multiplier_ * static_cast<double>(n) * static_cast<double>(n) *
                   static_cast<double>(n);
        return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(b)));
    }

  protected:
    bool connected_impl(const GraphView& view, Vertex v1, Vertex v2) override {
        std::uint64_t query_seed = mix_seed(seed_, query_index_++);
        return random_walk_connected(view, v1, v2, budget_for(view.order()), query_seed);
    }

  private:
    double multiplier_;
    std::uint64_t seed_;
    std::uint64_t query_index_ = 0;
};

}  // namespace logpath

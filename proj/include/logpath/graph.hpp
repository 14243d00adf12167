// graph.hpp - read-only weighted graph and on-the-fly induced-subgraph views.
//
// The graph is the read-only input tape: 1-indexed labels, undirected, simple,
// integer weights, adjacency lists sorted ascending by neighbor label. The
// j-th neighbor of i is adj(i, j) with j 1-based. Views answer adjacency
// queries for an induced subgraph without materializing it.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "logpath/metering.hpp"

namespace logpath {

using Vertex = std::int32_t;
using Weight = std::int64_t;

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
    Vertex to = 0;
    Weight weight = 0;
    bool operator==(const Edge&) const = default;
};

struct EdgeSpec {
    Vertex u = 0;
    Vertex v = 0;
    Weight weight = 0;
};

class Graph {
  public:
    Graph() = default;

    /// Validates and builds: rejects out-of-range labels, self-loops and
    /// duplicate edges. Adjacency lists come out sorted ascending.
    static Graph build(Vertex n, std::span<const EdgeSpec> edges) {
        if (n < 0) throw GraphError("vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n) + 1, {});
        for (const EdgeSpec& e : edges) {
            if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
                throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") has label outside [1," + std::to_string(n) + "]");
            if (e.u == e.v)
                throw GraphError("self-loop at vertex " + std::to_string(e.u));
            g.adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.weight});
            g.adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.weight});
        }
        for (Vertex v = 1; v <= n; ++v) {
            auto& list = g.adj_[static_cast<std::size_t>(v)];
            std::sort(list.begin(), list.end(),
                      [](const Edge& a, const Edge& b) { return a.to < b.to; });
            for (std::size_t j = 1; j < list.size(); ++j)
                if (list[j].to == list[j - 1].to)
                    throw GraphError("duplicate edge (" + std::to_string(v) + "," +
                                     std::to_string(list[j].to) + ")");
        }
        g.m_ = static_cast<std::int64_t>(edges.size());
        static std::atomic<std::uint64_t> next_uid{1};
        g.uid_ = next_uid.fetch_add(1, std::memory_order_relaxed);
        return g;
    }

    /// Distinguishes graph instances independently of their addresses, so
    /// caches (the connectivity memo) cannot serve stale answers after an
    /// address is reused.
    std::uint64_t uid() const { return uid_; }

    static Graph build(Vertex n, std::initializer_list<EdgeSpec> edges) {
        return build(n, std::span<const EdgeSpec>(edges.begin(), edges.size()));
    }

    Vertex order() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    int degree(Vertex v) const {
        check_label(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    /// j-th neighbor in ascending-label order, j 1-based.
    Edge adj(Vertex v, int j) const {
        check_label(v);
        const auto& list = adj_[static_cast<std::size_t>(v)];
        if (j < 1 || static_cast<std::size_t>(j) > list.size())
            throw GraphError("adjacency index " + std::to_string(j) + " out of range for vertex " +
                             std::to_string(v));
        return list[static_cast<std::size_t>(j - 1)];
    }

    std::span<const Edge> neighbors(Vertex v) const {
        check_label(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_label(u);
        check_label(v);
        const auto& list = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(list.begin(), list.end(), v,
                                   [](const Edge& e, Vertex x) { return e.to < x; });
        return it != list.end() && it->to == v;
    }

    Weight edge_weight(Vertex u, Vertex v) const {
        const auto& list = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(list.begin(), list.end(), v,
                                   [](const Edge& e, Vertex x) { return e.to < x; });
        if (it == list.end() || it->to != v)
            throw GraphError("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        return it->weight;
    }

    void check_label(Vertex v) const {
        if (v < 1 || v > n_)
            throw GraphError("vertex " + std::to_string(v) + " outside [1," + std::to_string(n_) +
                             "]");
    }

  private:
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::uint64_t uid_ = 0;
    std::vector<std::vector<Edge>> adj_;
};

/// Induced-subgraph view over a Graph; recomputes filtered adjacency per
/// access. delete-one stores one label; keep-set stores its member labels and
/// is meant for sets bounded by the algorithm's parameters; membership mode
/// re-derives the kept set through a predicate on demand.
class GraphView {
  public:
    enum class Mode { full, delete_one, keep_set, membership };

    explicit GraphView(const Graph& g, Meter* meter = nullptr)
        : g_(&g), mode_(Mode::full), meter_(meter) {}

    static GraphView without_vertex(const Graph& g, Vertex deleted, Meter* meter = nullptr) {
        g.check_label(deleted);
        GraphView v(g, meter);
        v.mode_ = Mode::delete_one;
        v.deleted_ = deleted;
        return v;
    }

    static GraphView keep_set(const Graph& g, std::vector<Vertex> kept, Meter* meter = nullptr) {
        GraphView v(g, meter);
        v.mode_ = Mode::keep_set;
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        for (Vertex x : kept) g.check_label(x);
        v.kept_ = std::move(kept);
        return v;
    }

    static GraphView membership(const Graph& g, std::function<bool(Vertex)> member,
                                Meter* meter = nullptr) {
        GraphView v(g, meter);
        v.mode_ = Mode::membership;
        v.member_ = std::move(member);
        return v;
    }

    const Graph& base() const { return *g_; }
    Vertex order() const { return g_->order(); }
    Mode mode() const { return mode_; }
    Vertex deleted_vertex() const { return deleted_; }

    bool alive(Vertex v) const {
        if (v < 1 || v > g_->order()) return false;
        switch (mode_) {
            case Mode::full: return true;
            case Mode::delete_one: return v != deleted_;
            case Mode::keep_set: return std::binary_search(kept_.begin(), kept_.end(), v);
            case Mode::membership: return member_(v);
        }
        return false;
    }

    int degree(Vertex v) const {
        require_alive(v);
        charge(meter_, StepKind::adj_access);
        int d = 0;
        for (const Edge& e : g_->neighbors(v))
            if (alive(e.to)) ++d;
        return d;
    }

    /// j-th remaining neighbor in ascending-label order, j 1-based.
    Edge adj(Vertex v, int j) const {
        require_alive(v);
        charge(meter_, StepKind::adj_access);
        if (j >= 1) {
            int seen = 0;
            for (const Edge& e : g_->neighbors(v)) {
                if (!alive(e.to)) continue;
                if (++seen == j) return e;
            }
        }
        throw GraphError("view adjacency index " + std::to_string(j) +
                         " out of range for vertex " + std::to_string(v));
    }

    Meter* meter() const { return meter_; }

  private:
    void require_alive(Vertex v) const {
        g_->check_label(v);
        if (!alive(v))
            throw GraphError("vertex " + std::to_string(v) + " is not in the view");
    }

    const Graph* g_;
    Mode mode_;
    Vertex deleted_ = 0;
    std::vector<Vertex> kept_;
    std::function<bool(Vertex)> member_;
    Meter* meter_ = nullptr;
};

/// Invariant-assertion toggle, read once from LOGPATH_DEBUG.
inline bool debug_checks_enabled() {
    static const bool enabled = [] {
        const char* env = std::getenv("LOGPATH_DEBUG");
        return env != nullptr && env[0] != '\0' && env[0] != '0';
    }();
    return enabled;
}

}  // namespace logpath

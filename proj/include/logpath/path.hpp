// path.hpp - write-only path emission and the in-block shortest path oracle
// shared by both path engines.
#pragma once

#include <string>
#include <vector>

#include "logpath/block_primitives.hpp"
#include "logpath/graph.hpp"
#include "logpath/metering.hpp"
#include "logpath/reference.hpp"

namespace logpath {

/// Write-only output sink for the path. Consecutive emitted vertices must be
/// adjacent in the base graph; a vertex equal to the last emitted one is
/// dropped, which resolves the boundary duplication between per-block calls.
/// The sink and its weight accumulator are verification side channels, exempt
/// from register charging.
class PathEmitter {
  public:
    explicit PathEmitter(const Graph& g) : g_(&g) {}

    void emit(Vertex v) {
        g_->check_label(v);
        if (!out_.empty()) {
            if (v == out_.back()) return;
            total_ += g_->edge_weight(out_.back(), v);  // throws when not adjacent
        }
        out_.push_back(v);
    }

    Vertex last_emitted() const { return out_.empty() ? 0 : out_.back(); }
    Weight total_weight() const { return total_; }
    const std::vector<Vertex>& vertices() const { return out_; }
    std::vector<Vertex> take() { return std::move(out_); }

  private:
    const Graph* g_;
    std::vector<Vertex> out_;
    Weight total_ = 0;
};

struct PathReport {
    bool found = false;
    std::vector<Vertex> vertices;
    Weight weight = 0;
};

/// Minimum-weight path between v1 and v2 within a (biconnected or single-edge)
/// block view, emitted endpoints included. Realized by the reference
/// shortest-path oracle; runs as exempt oracle internals.
inline void path_in_block(const GraphView& block_view, Vertex v1, Vertex v2, PathEmitter& emitter,
                          Meter* meter = nullptr) {
    if (v1 == v2) throw GraphError("path_in_block requires distinct endpoints");
    ReferencePath result = reference_shortest_path(block_view, v1, v2, meter);
    switch (result.status) {
        case PathStatus::negative_cycle:
            throw NegativeCycleError("negative-weight cycle in block containing " +
                                     std::to_string(v1) + " and " + std::to_string(v2));
        case PathStatus::unreachable:
            throw InvariantError("path_in_block on a disconnected view: " + std::to_string(v1) +
                                 " cannot reach " + std::to_string(v2));
        case PathStatus::found: break;
    }
    for (Vertex v : result.path) emitter.emit(v);
}

/// Contract handle for the in-block shortest path: given a view of one block
/// and two of its vertices, emit a minimum-weight path between them, both
/// endpoints included.
class PathInBlockOracle {
  public:
    virtual ~PathInBlockOracle() = default;
    virtual void emit_path(const GraphView& block_view, Vertex v1, Vertex v2,
                           PathEmitter& emitter, Meter* meter) = 0;
};

class ReferencePathInBlock final : public PathInBlockOracle {
  public:
    void emit_path(const GraphView& block_view, Vertex v1, Vertex v2, PathEmitter& emitter,
                   Meter* meter) override {
        path_in_block(block_view, v1, v2, emitter, meter);
    }
};

}  // namespace logpath

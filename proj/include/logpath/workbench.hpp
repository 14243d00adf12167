// workbench.hpp - cross-verification suites: exhaustive small-graph
// equivalence of the block machinery against the Hopcroft-Tarjan reference,
// and path equivalence of both engines against the full-graph shortest-path
// reference, exhaustively and on a randomized bounded corpus. Shared between
// the verify command and the acceptance suite.
#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "logpath/connectivity.hpp"
#include "logpath/enumerate.hpp"
#include "logpath/generator.hpp"
#include "logpath/graph_io.hpp"
#include "logpath/path_bounded.hpp"
#include "logpath/path_general.hpp"
#include "logpath/reference.hpp"

namespace logpath {

struct VerifyStats {
    std::int64_t graphs = 0;
    std::int64_t tuples = 0;   // block-primitive argument tuples checked
    std::int64_t queries = 0;  // (s, t) path queries checked
    std::int64_t mismatches = 0;
    std::string reproducer;  // graph file of the first mismatch
    std::string detail;

    void merge(const VerifyStats& other) {
        graphs += other.graphs;
        tuples += other.tuples;
        queries += other.queries;
        if (other.mismatches > 0 && mismatches == 0) {
            reproducer = other.reproducer;
            detail = other.detail;
        }
        mismatches += other.mismatches;
    }
};

namespace detail {

inline BoundedParams params_for(const Graph& g, const BlockDecomposition& dec) {
    int delta = 1;
    for (Vertex v = 1; v <= g.order(); ++v) delta = std::max(delta, g.degree(v));
    int k = std::max(2, dec.max_block_size());
    return {delta, k};
}

template <class Fn>
void shard_masks(Vertex n, int threads, Fn&& per_mask_fn) {
    const std::int64_t total = graph_mask_count(n);
    const int workers = std::max(1, threads);
    if (workers == 1 || total < 1024) {
        per_mask_fn(0, total, 0);
        return;
    }
    std::vector<std::thread> pool;
    const std::int64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t begin = w * chunk;
        std::int64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&per_mask_fn, begin, end, w] { per_mask_fn(begin, end, w); });
    }
    for (auto& th : pool) th.join();
}

inline void record_mismatch(VerifyStats& stats, const Graph& g, const std::string& what) {
    if (stats.mismatches == 0) {
        stats.reproducer = write_graph_file(g);
        stats.detail = what;
    }
    ++stats.mismatches;
}

inline void check_blocks_on(const Graph& g, VerifyStats& stats, bool inject_fault) {
    BlockDecomposition dec = biconnected_components(g);
    DfsConnectivity conn;
    BlockPrimitives bp(g, conn);
    const Vertex n = g.order();
    bool faulted = false;
    auto expect = [&](bool got, bool want, auto&& describe) {
        ++stats.tuples;
        if (inject_fault && !faulted) {
            got = !got;
            faulted = true;
        }
        if (got != want) record_mismatch(stats, g, describe());
    };

    for (Vertex v = 1; v <= n; ++v)
        expect(bp.is_articulation(v), dec.is_articulation(v),
               [&] { return "is_articulation(" + std::to_string(v) + ")"; });

    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v)
            expect(bp.are_in_block(u, v), u == v || dec.block_with(u, v) >= 0, [&] {
                return "are_in_block(" + std::to_string(u) + "," + std::to_string(v) + ")";
            });

    for (Vertex v1 = 1; v1 <= n; ++v1)
        for (Vertex v2 = 1; v2 <= n; ++v2) {
            if (v1 == v2) continue;
            int block = dec.block_with(v1, v2);
            if (block < 0) continue;  // is_in_block requires co-block arguments
            const auto& members = dec.blocks[static_cast<std::size_t>(block)];
            for (Vertex v = 1; v <= n; ++v)
                expect(bp.is_in_block(v1, v2, v),
                       std::binary_search(members.begin(), members.end(), v), [&] {
                           return "is_in_block(" + std::to_string(v1) + "," + std::to_string(v2) +
                                  "," + std::to_string(v) + ")";
                       });
            BlockId want{members.back(), members.front()};
            ++stats.tuples;
            if (bp.block_id(v1, v2) != want)
                record_mismatch(stats, g, "block_id(" + std::to_string(v1) + "," +
                                              std::to_string(v2) + ") != " + want.str());
        }
}

inline void check_paths_on(const Graph& g, VerifyStats& stats, bool inject_fault) {
    BlockDecomposition dec = biconnected_components(g);
    BoundedParams params = params_for(g, dec);
    DfsConnectivity conn;
    const Vertex n = g.order();
    bool faulted = false;
    for (Vertex s = 1; s <= n; ++s)
        for (Vertex t = 1; t <= n; ++t) {
            ++stats.queries;
            ReferencePath ref = reference_shortest_path(g, s, t);
            PathReport general = shortest_path_general(g, s, t, conn);
            PathReport bounded = shortest_path_bounded(g, s, t, params);
            Weight ref_distance = ref.distance;
            if (inject_fault && !faulted && ref.status == PathStatus::found) {
                ref_distance += 1;
                faulted = true;
            }
            const bool want_found = ref.status == PathStatus::found;
            if (general.found != want_found || bounded.found != want_found) {
                record_mismatch(stats, g,
                                "reachability disagrees at s=" + std::to_string(s) +
                                    " t=" + std::to_string(t));
                continue;
            }
            if (!want_found) continue;
            Weight wg = validate_path(g, general.vertices, s, t);
            Weight wb = validate_path(g, bounded.vertices, s, t);
            if (wg != general.weight || wb != bounded.weight || wg != ref_distance ||
                wb != ref_distance)
                record_mismatch(stats, g,
                                "weights disagree at s=" + std::to_string(s) +
                                    " t=" + std::to_string(t) + ": reference " +
                                    std::to_string(ref_distance) + ", general " +
                                    std::to_string(wg) + ", bounded " + std::to_string(wb));
        }
}

}  // namespace detail

/// Block-machinery agreement with the Hopcroft-Tarjan reference over every
/// connected graph on <= max_n vertices, unit weights, all valid tuples.
inline VerifyStats check_blocks_exhaustive(Vertex max_n, int threads = 1,
                                           bool inject_fault = false) {
    VerifyStats stats;
    std::mutex merge_mutex;
    for (Vertex n = 1; n <= max_n; ++n) {
        detail::shard_masks(n, threads, [&](std::int64_t begin, std::int64_t end, int) {
            VerifyStats local;
            for (std::int64_t mask = begin; mask < end; ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!is_connected(g)) continue;
                ++local.graphs;
                detail::check_blocks_on(g, local, inject_fault);
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            stats.merge(local);
        });
    }
    return stats;
}

/// Path-engine agreement with the shortest-path reference over the same
/// corpus, all (s, t) pairs.
inline VerifyStats check_paths_exhaustive(Vertex max_n, int threads = 1,
                                          bool inject_fault = false) {
    VerifyStats stats;
    std::mutex merge_mutex;
    for (Vertex n = 1; n <= max_n; ++n) {
        detail::shard_masks(n, threads, [&](std::int64_t begin, std::int64_t end, int) {
            VerifyStats local;
            for (std::int64_t mask = begin; mask < end; ++mask) {
                Graph g = graph_from_mask(n, mask);
                if (!is_connected(g)) continue;
                ++local.graphs;
                detail::check_paths_on(g, local, inject_fault);
            }
            std::lock_guard<std::mutex> lock(merge_mutex);
            stats.merge(local);
        });
    }
    return stats;
}

/// Path-engine agreement on a randomized bounded corpus: genBounded instances
/// with n <= 40, delta <= 4, k <= 6, weights 1..9, `pairs` random queries each.
inline VerifyStats check_paths_random(int instances, int pairs, std::uint64_t seed,
                                      int threads = 1, bool inject_fault = false) {
    VerifyStats stats;
    std::mutex merge_mutex;
    const int workers = std::max(1, threads);
    std::vector<std::thread> pool;
    const int chunk = (instances + workers - 1) / workers;
    auto run_range = [&](int begin, int end) {
        VerifyStats local;
        for (int i = begin; i < end; ++i) {
            SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
            Vertex n = static_cast<Vertex>(rng.between(8, 40));
            BoundedParams params{static_cast<int>(rng.between(2, 4)),
                                 static_cast<int>(rng.between(2, 6))};
            Graph g = generate_bounded(n, params, rng.next());
            validate_bounded(g, params);
            ++local.graphs;
            DfsConnectivity conn;
            bool faulted = false;
            for (int q = 0; q < pairs; ++q) {
                Vertex s = static_cast<Vertex>(rng.between(1, n));
                Vertex t = static_cast<Vertex>(rng.between(1, n));
                ++local.queries;
                ReferencePath ref = reference_shortest_path(g, s, t);
                PathReport general = shortest_path_general(g, s, t, conn);
                PathReport bounded = shortest_path_bounded(g, s, t, params);
                Weight ref_distance = ref.distance;
                if (inject_fault && !faulted && ref.status == PathStatus::found) {
                    ref_distance += 1;
                    faulted = true;
                }
                const bool want_found = ref.status == PathStatus::found;
                if (general.found != want_found || bounded.found != want_found) {
                    detail::record_mismatch(local, g,
                                            "reachability disagrees at s=" + std::to_string(s) +
                                                " t=" + std::to_string(t));
                    continue;
                }
                if (!want_found) continue;
                Weight wg = validate_path(g, general.vertices, s, t);
                Weight wb = validate_path(g, bounded.vertices, s, t);
                if (wg != general.weight || wb != bounded.weight || wg != ref_distance ||
                    wb != ref_distance)
                    detail::record_mismatch(
                        local, g, "weights disagree at s=" + std::to_string(s) + " t=" +
                                      std::to_string(t) + ": reference " +
                                      std::to_string(ref_distance) + ", general " +
                                      std::to_string(wg) + ", bounded " + std::to_string(wb));
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        stats.merge(local);
    };
    if (workers == 1) {
        run_range(0, instances);
    } else {
        for (int w = 0; w < workers; ++w) {
            int begin = w * chunk;
            int end = std::min(instances, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return stats;
}

}  // namespace logpath

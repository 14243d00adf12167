#include "logpath/reference.hpp"

#include <gtest/gtest.h>

#include "logpath/enumerate.hpp"
#include "logpath/graph_io.hpp"
#include "logpath/rng.hpp"
#include "test_util.hpp"

namespace logpath {
namespace {

TEST(BiconnectedComponents, SpecExamples) {
    BlockDecomposition p3 = biconnected_components(test::p3());
    ASSERT_EQ(p3.blocks.size(), 2u);
    EXPECT_EQ(p3.blocks[0], (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(p3.blocks[1], (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(p3.articulation_points, (std::vector<Vertex>{2}));

    BlockDecomposition k3 = biconnected_components(test::k3());
    ASSERT_EQ(k3.blocks.size(), 1u);
    EXPECT_EQ(k3.blocks[0], (std::vector<Vertex>{1, 2, 3}));
    EXPECT_TRUE(k3.articulation_points.empty());

    BlockDecomposition bowtie = biconnected_components(test::bowtie());
    ASSERT_EQ(bowtie.blocks.size(), 2u);
    EXPECT_EQ(bowtie.blocks[0], (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(bowtie.blocks[1], (std::vector<Vertex>{3, 4, 5}));
    EXPECT_EQ(bowtie.articulation_points, (std::vector<Vertex>{3}));
    // Brute-force articulation agrees (deletion + component count).
    for (Vertex v = 1; v <= 5; ++v)
        EXPECT_EQ(bowtie.is_articulation(v), test::brute_is_articulation(test::bowtie(), v));
}

TEST(BiconnectedComponents, WorksOnViews) {
    Graph bowtie = test::bowtie();
    GraphView no3 = GraphView::without_vertex(bowtie, 3);
    BlockDecomposition dec = biconnected_components(no3);
    ASSERT_EQ(dec.blocks.size(), 2u);
    EXPECT_EQ(dec.blocks[0], (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(dec.blocks[1], (std::vector<Vertex>{4, 5}));
    EXPECT_TRUE(dec.articulation_points.empty());
}

TEST(BiconnectedComponents, RestrictedVertexList) {
    Graph g = test::two_triangles_bridge();
    GraphView ball = GraphView::keep_set(g, {1, 2, 3, 6});
    BlockDecomposition dec = biconnected_components(ball, nullptr, std::vector<Vertex>{1, 2, 3, 6});
    ASSERT_EQ(dec.blocks.size(), 2u);
    EXPECT_EQ(dec.blocks[0], (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(dec.blocks[1], (std::vector<Vertex>{3, 6}));
}

// Exhaustive check of the decomposition invariants against the deletion-based
// articulation oracle, all graphs with <= 5 vertices (the acceptance suite
// extends this to 6).
TEST(BiconnectedComponents, ExhaustiveInvariantsUpTo5) {
    for (Vertex n = 1; n <= 5; ++n) {
        for (std::int64_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            BlockDecomposition dec = biconnected_components(g);
            // Articulation points match the brute-force definition.
            for (Vertex v = 1; v <= n; ++v)
                ASSERT_EQ(dec.is_articulation(v), test::brute_is_articulation(g, v))
                    << "n=" << n << " mask=" << mask << " v=" << v;
            // Every edge lies in exactly one block.
            std::int64_t covered = 0;
            for (const auto& b : dec.blocks) {
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = i + 1; j < b.size(); ++j)
                        if (g.has_edge(b[i], b[j])) ++covered;
            }
            ASSERT_EQ(covered, g.edge_count()) << "n=" << n << " mask=" << mask;
            // Blocks pairwise share at most one vertex; non-isolated coverage.
            for (std::size_t i = 0; i < dec.blocks.size(); ++i)
                for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
                    std::vector<Vertex> inter;
                    std::set_intersection(dec.blocks[i].begin(), dec.blocks[i].end(),
                                          dec.blocks[j].begin(), dec.blocks[j].end(),
                                          std::back_inserter(inter));
                    ASSERT_LE(inter.size(), 1u);
                }
            for (Vertex v = 1; v <= n; ++v) {
                bool in_some = !dec.blocks_of(v).empty();
                ASSERT_EQ(in_some, g.degree(v) > 0);
                // Articulation points are exactly the vertices in >= 2 blocks.
                ASSERT_EQ(dec.blocks_of(v).size() >= 2, dec.is_articulation(v));
            }
        }
    }
}

TEST(ReferenceShortestPath, SpecExamples) {
    Graph bowtie = test::bowtie();
    ReferencePath r = reference_shortest_path(bowtie, 1, 5);
    EXPECT_EQ(r.status, PathStatus::found);
    EXPECT_EQ(r.distance, 2);
    EXPECT_EQ(r.path, (std::vector<Vertex>{1, 3, 5}));
    // Exhaustive enumeration confirms the frozen distance.
    EXPECT_EQ(test::brute_min_path(bowtie, 1, 5), std::optional<Weight>(2));

    ReferencePath same = reference_shortest_path(bowtie, 4, 4);
    EXPECT_EQ(same.status, PathStatus::found);
    EXPECT_EQ(same.distance, 0);
    EXPECT_EQ(same.path, (std::vector<Vertex>{4}));

    Graph neg_triangle = Graph::build(3, {{1, 2, -1}, {2, 3, -1}, {1, 3, -1}});
    EXPECT_EQ(reference_shortest_path(neg_triangle, 1, 3).status, PathStatus::negative_cycle);

    Graph p3pi = test::p3_plus_isolated();
    EXPECT_EQ(reference_shortest_path(p3pi, 1, 4).status, PathStatus::unreachable);
}

TEST(ReferenceShortestPath, NegativeEdgesWithoutNegativeCycle) {
    // Unit triangle with one -1 edge: cycle weight 1, no negative cycle; the
    // optimum goes around through the negative edge.
    Graph g = Graph::build(3, {{1, 2, -1}, {2, 3, 1}, {1, 3, 1}});
    ReferencePath r = reference_shortest_path(g, 1, 3);
    ASSERT_EQ(r.status, PathStatus::found);
    EXPECT_EQ(r.distance, 0);
    EXPECT_EQ(r.path, (std::vector<Vertex>{1, 2, 3}));
    EXPECT_EQ(test::brute_min_path(g, 1, 3), std::optional<Weight>(0));
}

// Distance agrees with exhaustive simple-path enumeration on random weighted
// graphs without negative cycles, weights in {-2..9}.
TEST(ReferenceShortestPath, AgreesWithEnumerationUpTo5) {
    SplitMix64 rng(23);
    for (Vertex n = 2; n <= 5; ++n) {
        for (std::int64_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph unit = graph_from_mask(n, mask);
            if (!is_connected(unit)) continue;
            // Three random weightings per shape, rejecting negative cycles.
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<EdgeSpec> edges;
                for (Vertex u = 1; u <= n; ++u)
                    for (const Edge& e : unit.neighbors(u))
                        if (u < e.to) edges.push_back({u, e.to, rng.between(-2, 9)});
                Graph g = Graph::build(n, edges);
                auto cycle = test::brute_min_cycle(g);
                if (cycle && *cycle < 0) {
                    ASSERT_EQ(reference_shortest_path(g, 1, n).status, PathStatus::negative_cycle);
                    continue;
                }
                for (Vertex s = 1; s <= n; ++s)
                    for (Vertex t = 1; t <= n; ++t) {
                        ReferencePath r = reference_shortest_path(g, s, t);
                        ASSERT_EQ(r.status, PathStatus::found);
                        ASSERT_EQ(r.distance, *test::brute_min_path(g, s, t))
                            << write_graph_file(g) << " s=" << s << " t=" << t;
                        ASSERT_EQ(validate_path(g, r.path, s, t), r.distance);
                    }
            }
        }
    }
}

TEST(ValidatePath, SpecExamples) {
    Graph bowtie = test::bowtie();
    EXPECT_EQ(validate_path(bowtie, std::vector<Vertex>{1, 3, 5}, 1, 5), 2);
    EXPECT_EQ(validate_path(bowtie, std::vector<Vertex>{4}, 4, 4), 0);
    EXPECT_THROW(validate_path(bowtie, std::vector<Vertex>{1, 4}, 1, 4), GraphError);
    EXPECT_THROW(validate_path(bowtie, std::vector<Vertex>{1, 3}, 1, 5), GraphError);
    EXPECT_THROW(validate_path(bowtie, std::vector<Vertex>{}, 1, 5), GraphError);
}

}  // namespace
}  // namespace logpath

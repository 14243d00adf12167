#include "logpath/block_primitives.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "logpath/connectivity.hpp"
#include "logpath/enumerate.hpp"
#include "logpath/rng.hpp"
#include "test_util.hpp"

namespace logpath {
namespace {

TEST(NextAfter, ThreeCaseFormula) {
    EXPECT_EQ(next_after(5, 3, 4), 5);  // a2 <= p < a1
    EXPECT_EQ(next_after(3, 5, 4), 5);  // fall-through
    EXPECT_EQ(next_after(2, 7, 7), 2);  // a1 <= a2 <= p, cyclic wrap
    EXPECT_EQ(next_after(9, 9, 3), 9);
    EXPECT_EQ(next_after(9, 9, 9), 9);
    // Works on block ids under lexicographic order.
    EXPECT_EQ(next_after(BlockId{3, 1}, BlockId{5, 3}, BlockId{3, 1}), (BlockId{5, 3}));
    EXPECT_EQ(next_after(BlockId{3, 1}, BlockId{5, 3}, BlockId{5, 3}), (BlockId{3, 1}));
}

// next_after picks, of its two arguments, the better cyclic successor of p:
// smallest value strictly above p, else smallest overall.
TEST(NextAfter, EquivalentToKeyMinimum) {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20000; ++trial) {
        int a1 = static_cast<int>(rng.between(0, 20));
        int a2 = static_cast<int>(rng.between(0, 20));
        int p = static_cast<int>(rng.between(0, 20));
        auto key = [&](int x) { return std::pair(x > p ? 0 : 1, x); };
        int want = key(a1) <= key(a2) ? a1 : a2;
        ASSERT_EQ(next_after(a1, a2, p), want) << a1 << "," << a2 << "," << p;
    }
}

TEST(NextInList, SpecExamples) {
    EXPECT_EQ(next_in_list(std::vector<int>{2, 7, 4}, 4), 7);
    EXPECT_EQ(next_in_list(std::vector<int>{2, 7, 4}, 7), 2);
    EXPECT_EQ(next_in_list(std::vector<int>{5}, 9), 5);
    EXPECT_THROW(next_in_list(std::vector<int>{}, 1), GraphError);
}

// Iterating next_in_list from any member visits every distinct value exactly
// once before repeating: a cyclic permutation of the value set.
TEST(NextInList, CyclicPermutationProperty) {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> values;
        int len = static_cast<int>(rng.between(1, 12));
        for (int i = 0; i < len; ++i) values.push_back(static_cast<int>(rng.between(0, 9)));
        std::set<int> distinct(values.begin(), values.end());
        int start = values[static_cast<std::size_t>(rng.below(values.size()))];
        std::set<int> seen;
        int cur = start;
        for (std::size_t i = 0; i < distinct.size(); ++i) {
            cur = next_in_list(values, cur);
            ASSERT_TRUE(seen.insert(cur).second) << "revisit before covering all values";
        }
        EXPECT_EQ(seen, distinct);
        // After |distinct| steps the iteration is back at the start.
        EXPECT_EQ(cur, start);
    }
}

class BlockPrimitivesFixture : public ::testing::Test {
  protected:
    DfsConnectivity conn;
};

TEST_F(BlockPrimitivesFixture, IsInBlockExamples) {
    Graph k3 = test::k3();
    BlockPrimitives bpk(k3, conn);
    EXPECT_TRUE(bpk.is_in_block(1, 2, 3));
    EXPECT_TRUE(bpk.is_in_block(1, 2, 1));  // endpoint short-circuit

    Graph p3 = test::p3();
    BlockPrimitives bpp(p3, conn);
    EXPECT_FALSE(bpp.is_in_block(1, 2, 3));
}

TEST_F(BlockPrimitivesFixture, AreInBlockExamples) {
    Graph bowtie = test::bowtie();
    BlockPrimitives bp(bowtie, conn);
    EXPECT_TRUE(bp.are_in_block(1, 3));
    EXPECT_FALSE(bp.are_in_block(1, 4));
    EXPECT_TRUE(bp.are_in_block(4, 4));
}

TEST_F(BlockPrimitivesFixture, IsArticulationExamples) {
    Graph p3 = test::p3();
    BlockPrimitives bpp(p3, conn);
    EXPECT_TRUE(bpp.is_articulation(2));
    EXPECT_FALSE(bpp.is_articulation(1));

    Graph k3 = test::k3();
    BlockPrimitives bpk(k3, conn);
    EXPECT_FALSE(bpk.is_articulation(1));

    Graph p3pi = test::p3_plus_isolated();
    BlockPrimitives bpi(p3pi, conn);
    EXPECT_FALSE(bpi.is_articulation(4));  // isolated
    EXPECT_FALSE(bpi.is_articulation(1));  // degree 1
}

TEST_F(BlockPrimitivesFixture, BlockIdExamples) {
    Graph k3 = test::k3();
    BlockPrimitives bpk(k3, conn);
    EXPECT_EQ(bpk.block_id(1, 2), (BlockId{3, 1}));

    Graph bowtie = test::bowtie();
    BlockPrimitives bpb(bowtie, conn);
    EXPECT_EQ(bpb.block_id(3, 4), (BlockId{5, 3}));

    Graph p3 = test::p3();
    BlockPrimitives bpp(p3, conn);
    EXPECT_EQ(bpp.block_id(1, 2), (BlockId{2, 1}));
}

TEST_F(BlockPrimitivesFixture, NextArticulationExamples) {
    Graph bowtie = test::bowtie();
    BlockPrimitives bpb(bowtie, conn);
    EXPECT_EQ(bpb.next_articulation(1, 2, 3), 3);  // sole articulation point

    Graph two = test::two_triangles_bridge();
    BlockPrimitives bpt(two, conn);
    // Bridge block {3,6}: articulation set is exactly {3,6}.
    EXPECT_EQ(bpt.next_articulation(3, 6, 3), 6);
    EXPECT_EQ(bpt.next_articulation(3, 6, 6), 3);

    Graph k3 = test::k3();
    BlockPrimitives bpk(k3, conn);
    EXPECT_EQ(bpk.next_articulation(1, 2, 1), 1);  // no articulation points: p unchanged
}

TEST_F(BlockPrimitivesFixture, NextBlockExamples) {
    Graph bowtie = test::bowtie();
    BlockPrimitives bpb(bowtie, conn);
    // Pinned by the scan rule: the last index achieving the winning id.
    EXPECT_EQ(bpb.next_block(1, 2, 3), 5);
    EXPECT_EQ(bpb.block_id(3, bpb.next_block(1, 2, 3)), (BlockId{5, 3}));
    // Wrap back to the other block.
    EXPECT_EQ(bpb.block_id(3, bpb.next_block(3, 4, 3)), (BlockId{3, 1}));
    EXPECT_EQ(bpb.next_block(3, 4, 3), 2);

    Graph k3 = test::k3();
    BlockPrimitives bpk(k3, conn);
    EXPECT_EQ(bpk.block_id(1, bpk.next_block(1, 2, 1)), (BlockId{3, 1}));  // single block, self

    Graph p3pi = test::p3_plus_isolated();
    BlockPrimitives bpi(p3pi, conn);
    EXPECT_THROW(bpi.next_block(1, 2, 4), GraphError);  // isolated pivot
}

TEST_F(BlockPrimitivesFixture, IsInSubgraphExamples) {
    Graph bowtie = test::bowtie();
    BlockPrimitives bp(bowtie, conn);
    EXPECT_TRUE(is_in_subgraph(bp, 1, 3, 5));
    EXPECT_TRUE(is_in_subgraph(bp, 4, 3, 1));
    EXPECT_FALSE(is_in_subgraph(bp, 1, 3, 2));
    EXPECT_TRUE(is_in_subgraph(bp, 1, 3, 3));  // t == p
    // Derived from the component computation: subgraph(1,3) = {3,4,5}.
    BlockDecomposition dec = biconnected_components(bowtie);
    EXPECT_EQ(test::brute_subgraph_vertices(bowtie, dec, 1, 3),
              (std::vector<Vertex>{3, 4, 5}));
}

TEST_F(BlockPrimitivesFixture, TraverseComponentExamples) {
    Graph p3pi = test::p3_plus_isolated();
    BlockPrimitives bpi(p3pi, conn);
    EXPECT_FALSE(traverse_component(bpi, 1, 4));
    EXPECT_TRUE(traverse_component(bpi, 1, 1));
    EXPECT_FALSE(traverse_component(bpi, 4, 1));  // isolated start
    EXPECT_TRUE(traverse_component(bpi, 4, 4));

    Graph bowtie = test::bowtie();
    BlockPrimitives bpb(bowtie, conn);
    EXPECT_TRUE(traverse_component(bpb, 1, 5));

    Graph two = test::two_triangles_bridge();
    BlockPrimitives bpt(two, conn);
    EXPECT_TRUE(traverse_component(bpt, 1, 8));
    EXPECT_FALSE(traverse_component(bpt, 1, 4));
}

struct TourRecorder : TraversalObserver {
    std::vector<BlockId> entered;
    std::int64_t steps = 0;
    void block_entered(BlockId id) override { entered.push_back(id); }
    void block_step() override { ++steps; }
};

// From every valid (v, p) seed: the tour stops within 2 (#blocks + #arts)
// block-steps and the visited ids cover exactly the blocks on the p-side.
TEST_F(BlockPrimitivesFixture, EulerSubtourTerminationAndCoverage) {
    for (Vertex n = 2; n <= 5; ++n) {
        for (std::int64_t mask = 0; mask < graph_mask_count(n); ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (!is_connected(g)) continue;
            BlockDecomposition dec = biconnected_components(g);
            DfsConnectivity local_conn;
            BlockPrimitives bp(g, local_conn);
            const std::int64_t budget =
                2 * (static_cast<std::int64_t>(dec.blocks.size()) +
                     static_cast<std::int64_t>(dec.articulation_points.size()));
            for (Vertex v = 1; v <= n; ++v)
                for (Vertex p = 1; p <= n; ++p) {
                    if (v == p || dec.block_with(v, p) < 0) continue;
                    // t = v runs the tour to exhaustion: v sits in the removed
                    // part of block(v, p), so no visited block contains it.
                    TourRecorder rec;
                    bool found = is_in_subgraph(bp, v, p, v, &rec);
                    ASSERT_FALSE(found);
                    ASSERT_LE(rec.steps, budget + 1);

                    // The visited ids are exactly the blocks inside the p-side
                    // region, home block excluded.
                    std::vector<Vertex> region = test::brute_subgraph_vertices(g, dec, v, p);
                    int home = dec.block_with(v, p);
                    const auto& hb = dec.blocks[static_cast<std::size_t>(home)];
                    const BlockId home_id{hb.back(), hb.front()};
                    std::set<BlockId> want;
                    for (const auto& b : dec.blocks) {
                        bool inside = true;
                        for (Vertex x : b)
                            if (x != p && !std::binary_search(region.begin(), region.end(), x))
                                inside = false;
                        BlockId id{b.back(), b.front()};
                        if (inside && !(id == home_id)) want.insert(id);
                    }
                    std::set<BlockId> got(rec.entered.begin(), rec.entered.end());
                    ASSERT_EQ(got, want)
                        << "n=" << n << " mask=" << mask << " v=" << v << " p=" << p;
                }
        }
    }
}

// Register discipline: every operation runs in the constant register file,
// high-water independent of n.
TEST_F(BlockPrimitivesFixture, ConstantRegisterFile) {
    std::vector<std::int64_t> waters;
    for (Vertex n : {8, 32, 128}) {
        Graph g = test::path_graph(n);
        Meter meter;
        DfsConnectivity local_conn;
        {
            BlockPrimitives bp(g, local_conn, &meter);
            (void)bp.is_in_block(1, 2, static_cast<Vertex>(n));
            (void)bp.are_in_block(1, static_cast<Vertex>(n));
            (void)bp.is_articulation(2);
            (void)bp.block_id(1, 2);
            (void)bp.next_articulation(1, 2, 1);
            (void)bp.next_block(1, 2, 1);
            (void)is_in_subgraph(bp, 1, 2, static_cast<Vertex>(n), nullptr);
            (void)traverse_component(bp, 1, static_cast<Vertex>(n), nullptr);
        }
        waters.push_back(meter.report().high_water);
    }
    EXPECT_EQ(waters[0], waters[1]);
    EXPECT_EQ(waters[1], waters[2]);
    EXPECT_GT(waters[0], 0);
}

}  // namespace
}  // namespace logpath

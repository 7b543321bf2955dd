#include "trifree/frame_encoding.hpp"
#include "trifree/graph.hpp"

#include <gtest/gtest.h>

using namespace trifree;

TEST(FrameEncoding, TreeForOneIsOneCrossingPair) {
  const StrategyTree tree = expand_tree(1);
  ASSERT_EQ(tree.nodes.size(), 2u);
  EXPECT_EQ(tree.budget, 2);
  EXPECT_EQ(tree.nodes[1].parent, std::optional<std::size_t>(0));
  EXPECT_EQ(tree.nodes[1].response, 1);
  EXPECT_TRUE(overlaps(tree.nodes[0].interval, tree.nodes[1].interval));
  const FrameFamily family = encode(tree);
  const Graph g = intersection_graph(family.copies);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(FrameEncoding, TreeSizes) {
  EXPECT_EQ(expand_tree(2).nodes.size(), 5u);
  EXPECT_EQ(expand_tree(3).nodes.size(), 53u);
  EXPECT_THROW(expand_tree(4), std::invalid_argument);
  EXPECT_THROW(expand_tree(0), std::invalid_argument);
  EXPECT_THROW(expand_tree(3, 0, 2), std::invalid_argument);
  EXPECT_EQ(expand_tree(2, 5).budget, 5);
}

TEST(FrameEncoding, ChildSlotsInterleaveStrictly) {
  const StrategyTree tree = expand_tree(3);
  for (const auto& node : tree.nodes) {
    const Rat part = (node.y_hi - node.y_lo) / Rat(static_cast<long>(2 * node.children.size() + 1));
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const StrategyNode& child = tree.nodes[node.children[i].second];
      EXPECT_EQ(child.y_lo, node.y_lo + part * Rat(static_cast<long>(2 * i + 1)));
      EXPECT_EQ(child.y_hi, child.y_lo + part);
      EXPECT_EQ(child.prefix.size(), node.prefix.size() + 1);
    }
  }
}

TEST(FrameEncoding, BranchesAndAncestors) {
  const StrategyTree tree = expand_tree(2);
  for (std::size_t v = 0; v < tree.nodes.size(); ++v) {
    const auto b = tree.branch(v);
    EXPECT_EQ(b.front(), 0u);
    EXPECT_EQ(b.back(), v);
    EXPECT_EQ(b.size(), tree.nodes[v].depth() + 1);
    for (std::size_t i = 0; i + 1 < b.size(); ++i) EXPECT_TRUE(tree.is_ancestor(b[i], v));
  }
  EXPECT_FALSE(tree.is_ancestor(0, 0));
}

TEST(FrameEncoding, LawHoldsAndEncodingIsTriangleFree) {
  for (int k = 1; k <= 3; ++k) {
    const StrategyTree tree = expand_tree(k);
    const FrameFamily family = encode(tree);
    EXPECT_TRUE(check_encoding_law(tree, family).empty()) << k;
    const EncodingReport report = certify(family, k);
    EXPECT_TRUE(report.triangle_free);
    EXPECT_EQ(report.clique_number, 2u);
    EXPECT_TRUE(report.bound_holds);
    EXPECT_EQ(report.chromatic.lower, k + 1);
  }
}

TEST(FrameEncoding, CrossingPairsMatchBranchOverlaps) {
  const StrategyTree tree = expand_tree(2);
  const FrameFamily family = encode(tree);
  const Graph g = intersection_graph(family.copies);
  std::size_t predicted = 0;
  for (std::size_t a = 0; a < tree.nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < tree.nodes.size(); ++b) {
      const bool p = tree.same_branch(a, b) && overlaps(tree.nodes[a].interval, tree.nodes[b].interval);
      predicted += p ? 1 : 0;
      EXPECT_EQ(g.adjacent(a, b), p) << a << " " << b;
    }
  }
  EXPECT_EQ(g.edge_count(), predicted);
}

TEST(FrameEncoding, MovedFrameBreaksTheLaw) {
  const StrategyTree tree = expand_tree(2);
  FrameFamily family = encode(tree);
  // Stretch the last frame over the whole strip so it meets other branches.
  const auto& frame = catalog_entry("frame");
  const StrategyNode& last = tree.nodes.back();
  family.copies.back() = TransformedCopy(frame.shape, XYTransform::mapping(frame.features.bbox,
                                         Rect(last.interval.lo, last.interval.hi, 0, 1)),
                                         family.copies.back().lineage());
  EXPECT_FALSE(check_encoding_law(tree, family).empty());
}

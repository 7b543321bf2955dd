#pragma once

#include "trifree/coloring.hpp"
#include "trifree/online_game.hpp"
#include "trifree/shapes.hpp"

#include <optional>
#include <vector>

namespace trifree {

struct StrategyNode {
  Interval interval;
  std::optional<std::size_t> parent;
  int response = 0;         ///< color the parent received to lead here; 0 at the root
  std::vector<int> prefix;  ///< colors of the ancestors, root first
  /// (color, child) pairs sorted by color
  std::vector<std::pair<int, std::size_t>> children;
  Rat y_lo;  ///< slot [y_lo, y_hi]
  Rat y_hi;

  std::size_t depth() const { return prefix.size(); }
};

/// Every branch of the shortest strategy over canonical painter colors.
struct StrategyTree {
  int k = 0;
  int budget = 0;
  std::vector<StrategyNode> nodes;  ///< preorder; node 0 is the root

  bool is_ancestor(std::size_t a, std::size_t d) const;
  bool same_branch(std::size_t a, std::size_t b) const { return is_ancestor(a, b) || is_ancestor(b, a); }
  /// Nodes from the root down to `node`, inclusive.
  std::vector<std::size_t> branch(std::size_t node) const;
};

inline constexpr int kDefaultTreeLimit = 3;

/// Expands the tree with canonical colors up to `budget` (0 means k + 1).
/// Slots: the root gets [0, 1]; a slot with r children is cut into 2r + 1
/// equal parts and child i takes part 2i. Throws std::invalid_argument for
/// k outside [1, limit].
StrategyTree expand_tree(int k, int budget = 0, int limit = kDefaultTreeLimit);

struct FrameFamily {
  std::vector<Rect> frames;             ///< frame i is the boundary of frames[i]
  std::vector<TransformedCopy> copies;  ///< unit frame mapped onto frames[i], lineage frame:i
};

struct LawViolation {
  std::size_t a = 0;
  std::size_t b = 0;
  bool frames_meet = false;
  bool predicted = false;
};

/// Pairs where "frames meet" differs from "intervals overlap and the nodes
/// share a branch".
std::vector<LawViolation> check_encoding_law(const StrategyTree& tree, const FrameFamily& family);

/// One frame per node; throws ConstructionError if the law fails.
FrameFamily encode(const StrategyTree& tree);

struct EncodingReport {
  std::size_t frames = 0;
  bool triangle_free = false;
  std::size_t clique_number = 0;
  ChromaticResult chromatic;
  bool bound_holds = false;  ///< chromatic.lower >= k + 1
};

EncodingReport certify(const FrameFamily& family, int k, const SolverOptions& options = {});

}  // namespace trifree

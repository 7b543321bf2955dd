#include "trifree/frame_encoding.hpp"

#include "trifree/graph.hpp"
#include "trifree/independent.hpp"

#include <stdexcept>

namespace trifree {

bool StrategyTree::is_ancestor(std::size_t a, std::size_t d) const {
  std::optional<std::size_t> cur = nodes.at(d).parent;
  while (cur) {
    if (*cur == a) return true;
    cur = nodes[*cur].parent;
  }
  return false;
}

std::vector<std::size_t> StrategyTree::branch(std::size_t node) const {
  std::vector<std::size_t> out;
  std::optional<std::size_t> cur = node;
  while (cur) {
    out.push_back(*cur);
    cur = nodes.at(*cur).parent;
  }
  return {out.rbegin(), out.rend()};
}

namespace {

void expand(const Presenter& presenter, StrategyTree& tree, std::size_t index) {
  std::vector<int> prefix = tree.nodes[index].prefix;
  const PresenterStep here = presenter.next(prefix);
  std::vector<std::pair<int, Interval>> next;
  for (int c : canonical_colors(here.transcript, tree.budget)) {
    prefix.push_back(c);
    const PresenterStep step = presenter.next(prefix);
    if (!step.done) next.emplace_back(c, *step.next);
    prefix.pop_back();
  }

  const Rat lo = tree.nodes[index].y_lo;
  const Rat part = (tree.nodes[index].y_hi - lo) / Rat(static_cast<long>(2 * next.size() + 1));
  for (std::size_t i = 0; i < next.size(); ++i) {
    StrategyNode child;
    child.interval = next[i].second;
    child.parent = index;
    child.response = next[i].first;
    child.prefix = tree.nodes[index].prefix;
    child.prefix.push_back(next[i].first);
    child.y_lo = lo + part * Rat(static_cast<long>(2 * i + 1));
    child.y_hi = lo + part * Rat(static_cast<long>(2 * i + 2));
    const std::size_t id = tree.nodes.size();
    tree.nodes.push_back(std::move(child));
    tree.nodes[index].children.emplace_back(next[i].first, id);
    expand(presenter, tree, id);
  }
}

}  // namespace

StrategyTree expand_tree(int k, int budget, int limit) {
  if (k < 1 || k > limit) {
    throw std::invalid_argument("strategy tree needs 1 <= k <= " + std::to_string(limit));
  }
  StrategyTree tree;
  tree.k = k;
  tree.budget = budget > 0 ? budget : k + 1;
  const Presenter presenter(k);
  StrategyNode root;
  root.interval = *presenter.next({}).next;
  root.y_lo = Rat(0);
  root.y_hi = Rat(1);
  tree.nodes.push_back(std::move(root));
  expand(presenter, tree, 0);
  return tree;
}

std::vector<LawViolation> check_encoding_law(const StrategyTree& tree, const FrameFamily& family) {
  std::vector<LawViolation> out;
  const std::size_t n = tree.nodes.size();
  // Ancestor sets by walking each branch once.
  std::vector<std::vector<char>> related(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t a : tree.branch(v)) {
      related[v][a] = 1;
      related[a][v] = 1;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool predicted = related[a][b] && overlaps(tree.nodes[a].interval, tree.nodes[b].interval);
      const bool meet = copies_intersect(family.copies[a], family.copies[b]);
      if (meet != predicted) out.push_back({a, b, meet, predicted});
    }
  }
  return out;
}

FrameFamily encode(const StrategyTree& tree) {
  const CatalogEntry& frame = catalog_entry("frame");
  FrameFamily family;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const StrategyNode& node = tree.nodes[i];
    const Rect r(node.interval.lo, node.interval.hi, node.y_lo, node.y_hi);
    family.frames.push_back(r);
    family.copies.emplace_back(frame.shape, XYTransform::mapping(frame.features.bbox, r),
                               Lineage{LineageKind::frame, i});
  }
  const auto violations = check_encoding_law(tree, family);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw ConstructionError("frames " + std::to_string(v.a) + " and " + std::to_string(v.b) +
                            (v.frames_meet ? " meet but should not" : " should meet but do not"));
  }
  return family;
}

EncodingReport certify(const FrameFamily& family, int k, const SolverOptions& options) {
  EncodingReport report;
  report.frames = family.copies.size();
  const Graph g = intersection_graph(family.copies);
  report.triangle_free = is_triangle_free(g);
  report.clique_number = clique_number(g);
  report.chromatic = chromatic_number(g, options);
  report.bound_holds = report.chromatic.lower >= k + 1;
  return report;
}

}  // namespace trifree

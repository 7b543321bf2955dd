#pragma once

// Seeded random instances shared by the property and acceptance suites.

#include "chromatic_oracle.hpp"
#include "grid_oracle.hpp"

#include "trifree/geometry.hpp"
#include "trifree/graph.hpp"

#include <random>

namespace oracle {

inline EdgeList random_edges(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution edge(density);
  EdgeList out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) out.emplace_back(u, v);
    }
  }
  return out;
}

inline trifree::Graph to_graph(int n, const EdgeList& edges) {
  trifree::Graph g(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  return g;
}

inline GSeg random_seg(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> coord(0, span);
  std::bernoulli_distribution horizontal(0.5);
  int lo = coord(rng);
  int hi = coord(rng);
  if (lo > hi) std::swap(lo, hi);
  return {horizontal(rng), coord(rng), lo, hi};
}

inline GRect random_rect(std::mt19937_64& rng, int span) {
  std::uniform_int_distribution<int> coord(0, span);
  int a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
  return {std::min(a, b), std::max(a, b), std::min(c, d), std::max(c, d)};
}

inline trifree::Seg to_seg(const GSeg& s) {
  return s.horizontal ? trifree::Seg::horizontal(s.fixed, s.lo, s.hi) : trifree::Seg::vertical(s.fixed, s.lo, s.hi);
}

inline trifree::Rect to_rect(const GRect& r) { return trifree::Rect(r.x_lo, r.x_hi, r.y_lo, r.y_hi); }

}  // namespace oracle

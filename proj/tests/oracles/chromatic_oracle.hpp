#pragma once

// Reference chromatic numbers that share no code with the solver.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// Minimum number of independent sets covering the vertices, by dynamic
// programming over all 2^n vertex subsets. n <= 20.
inline int chromatic_subset_dp(int n, const EdgeList& edges) {
  if (n == 0) return 0;
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : edges) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<char> independent(full + 1, 0);
  independent[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (adj[low] & rest) == 0;
  }
  constexpr int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(full + 1, inf);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    // Independent subsets of s that contain its lowest vertex.
    const std::uint32_t others = s ^ low;
    for (std::uint32_t t = others;; t = (t - 1) & others) {
      const std::uint32_t part = t | low;
      if (independent[part] && best[s ^ part] + 1 < best[s]) best[s] = best[s ^ part] + 1;
      if (t == 0) break;
    }
  }
  return best[full];
}

// Smallest c such that one of the c^n assignments is proper. Tiny n only.
inline int chromatic_all_assignments(int n, const EdgeList& edges) {
  for (int c = 1; c <= n; ++c) {
    std::vector<int> color(n, 0);
    while (true) {
      bool proper = true;
      for (auto [u, v] : edges) proper = proper && color[u] != color[v];
      if (proper) return c;
      int i = 0;
      while (i < n && ++color[i] == c) color[i++] = 0;
      if (i == n) break;
    }
  }
  return 0;
}

// Fewest blocks over every partition of the vertices into independent sets,
// each partition visited as a restricted growth string and checked whole.
inline int chromatic_all_partitions(int n, const EdgeList& edges) {
  if (n == 0) return 0;
  std::vector<int> block(n, 0);
  int best = n;
  const auto visit = [&](const auto& self, int v, int blocks) -> void {
    if (v == n) {
      for (auto [a, b] : edges) {
        if (block[a] == block[b]) return;
      }
      best = std::min(best, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[v] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace oracle

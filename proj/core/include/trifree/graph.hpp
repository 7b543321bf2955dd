#pragma once

#include "trifree/shapes.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trifree {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : adjacency_(n), labels_(n) {}

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }

  /// Idempotent. Throws std::invalid_argument on self-loops or bad indices.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  /// Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  const std::string& label(std::size_t v) const { return labels_.at(v); }
  void set_label(std::size_t v, std::string label) { labels_.at(v) = std::move(label); }

  /// Subgraph induced by `vertices` (in the given order).
  Graph induced(std::span<const std::size_t> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edges_ = 0;
};

/// Edge uv iff copies u and v intersect; vertex order is family order and
/// vertices are labelled with the copies' lineage. `jobs` > 1 splits the
/// pair sweep across threads; the result does not depend on it.
Graph intersection_graph(std::span<const TransformedCopy> family, unsigned jobs = 1);

std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Exact maximum clique (Bron-Kerbosch with pivoting). Triangle-free
/// graphs short-circuit to an edge.
std::vector<std::size_t> maximum_clique(const Graph& g);
std::size_t clique_number(const Graph& g);

std::vector<std::size_t> neighbors_in_family(std::span<const TransformedCopy> family, std::size_t v);

}  // namespace trifree

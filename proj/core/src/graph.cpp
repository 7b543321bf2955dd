#include "trifree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace trifree {

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u >= size() || v >= size()) throw std::invalid_argument("edge endpoint out of range");
  auto& nu = adjacency_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adjacency_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edges_;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nu = adjacency_.at(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const std::size_t> vertices) const {
  Graph sub(vertices.size());
  std::vector<std::size_t> position(size(), size());
  for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = i;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    sub.set_label(i, label(vertices[i]));
    for (std::size_t w : adjacency_[vertices[i]]) {
      if (position[w] != size() && position[w] > i) sub.add_edge(i, position[w]);
    }
  }
  return sub;
}

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Sweep over copies sorted by left bounding-box edge; only pairs whose
// x-extents overlap are tested exactly.
void sweep(std::span<const TransformedCopy> family, std::span<const std::size_t> order,
           std::size_t begin, std::size_t end, EdgeList& out) {
  for (std::size_t a = begin; a < end; ++a) {
    const TransformedCopy& ca = family[order[a]];
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const TransformedCopy& cb = family[order[b]];
      if (cb.bbox().x_lo > ca.bbox().x_hi) break;
      if (cb.bbox().y_lo > ca.bbox().y_hi || ca.bbox().y_lo > cb.bbox().y_hi) continue;
      if (copies_intersect(ca, cb)) out.emplace_back(order[a], order[b]);
    }
  }
}

}  // namespace

Graph intersection_graph(std::span<const TransformedCopy> family, unsigned jobs) {
  const std::size_t n = family.size();
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.set_label(v, family[v].lineage().str());

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].bbox().x_lo < family[b].bbox().x_lo;
  });

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<EdgeList> parts(jobs);
  if (jobs == 1) {
    sweep(family, order, 0, n, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      // Interleaved row ownership balances the triangular workload.
      workers.emplace_back([&, j] {
        for (std::size_t a = j; a < n; a += jobs) sweep(family, order, a, a + 1, parts[j]);
      });
    }
    for (auto& w : workers) w.join();
  }
  for (const auto& part : parts) {
    for (const auto& [u, v] : part) g.add_edge(u, v);
  }
  return g;
}

std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    const auto& nu = g.neighbors(u);
    for (std::size_t v : nu) {
      if (v <= u) continue;
      const auto& nv = g.neighbors(v);
      auto i = std::upper_bound(nu.begin(), nu.end(), v);
      auto j = std::upper_bound(nv.begin(), nv.end(), v);
      while (i != nu.end() && j != nv.end()) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          return std::array<std::size_t, 3>{u, v, *i};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

void bron_kerbosch(const Graph& g, std::vector<std::size_t>& current, std::vector<std::size_t> candidates,
                   std::vector<std::size_t> excluded, std::vector<std::size_t>& best) {
  if (candidates.empty() && excluded.empty()) {
    if (current.size() > best.size()) best = current;
    return;
  }
  if (current.size() + candidates.size() <= best.size()) return;

  // Pivot on the vertex with the most neighbours among the candidates.
  std::size_t pivot = candidates.empty() ? excluded.front() : candidates.front();
  std::size_t pivot_hits = 0;
  for (const auto* pool : {&candidates, &excluded}) {
    for (std::size_t u : *pool) {
      std::size_t hits = 0;
      for (std::size_t c : candidates) hits += g.adjacent(u, c) ? 1 : 0;
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
  }

  std::vector<std::size_t> branch;
  for (std::size_t c : candidates) {
    if (!g.adjacent(pivot, c)) branch.push_back(c);
  }
  for (std::size_t v : branch) {
    std::vector<std::size_t> next_candidates;
    std::vector<std::size_t> next_excluded;
    for (std::size_t c : candidates) {
      if (g.adjacent(v, c)) next_candidates.push_back(c);
    }
    for (std::size_t x : excluded) {
      if (g.adjacent(v, x)) next_excluded.push_back(x);
    }
    current.push_back(v);
    bron_kerbosch(g, current, std::move(next_candidates), std::move(next_excluded), best);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

std::vector<std::size_t> maximum_clique(const Graph& g) {
  if (g.size() == 0) return {};
  if (is_triangle_free(g)) {
    if (g.edge_count() == 0) return {0};
    const auto first = g.edges().front();
    return {first.first, first.second};
  }
  std::vector<std::size_t> candidates(g.size());
  std::iota(candidates.begin(), candidates.end(), 0);
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  bron_kerbosch(g, current, std::move(candidates), {}, best);
  std::sort(best.begin(), best.end());
  return best;
}

std::size_t clique_number(const Graph& g) { return maximum_clique(g).size(); }

std::vector<std::size_t> neighbors_in_family(std::span<const TransformedCopy> family, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t u = 0; u < family.size(); ++u) {
    if (u != v && copies_intersect(family[u], family[v])) out.push_back(u);
  }
  return out;
}

}  // namespace trifree

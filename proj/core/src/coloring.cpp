#include "trifree/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trifree {

bool verify_coloring(const Graph& g, const Coloring& coloring) {
  if (coloring.size() != g.size()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (coloring[v] <= 0) return false;
    for (std::size_t w : g.neighbors(v)) {
      if (coloring[w] == coloring[v]) return false;
    }
  }
  return true;
}

int color_count(const Coloring& coloring) {
  std::vector<int> seen(coloring.begin(), coloring.end());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(std::count_if(seen.begin(), seen.end(), [](int c) { return c > 0; }));
}

namespace {

int smallest_free_color(const Graph& g, const Coloring& coloring, std::size_t v, std::vector<char>& scratch) {
  scratch.assign(g.degree(v) + 2, 0);
  for (std::size_t w : g.neighbors(v)) {
    const int c = coloring[w];
    if (c > 0 && static_cast<std::size_t>(c) < scratch.size()) scratch[c] = 1;
  }
  int c = 1;
  while (scratch[c]) ++c;
  return c;
}

}  // namespace

Coloring greedy_coloring(const Graph& g, std::span<const std::size_t> order) {
  if (order.size() != g.size()) throw std::invalid_argument("greedy order is not a permutation");
  Coloring coloring(g.size(), 0);
  std::vector<char> scratch;
  for (std::size_t v : order) {
    if (coloring.at(v) != 0) throw std::invalid_argument("greedy order repeats a vertex");
    coloring[v] = smallest_free_color(g, coloring, v, scratch);
  }
  return coloring;
}

Coloring greedy_coloring(const Graph& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  return greedy_coloring(g, order);
}

Coloring dsatur_coloring(const Graph& g) {
  const std::size_t n = g.size();
  Coloring coloring(n, 0);
  std::vector<std::vector<int>> seen(n);  // sorted distinct neighbour colors
  std::vector<char> scratch;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (coloring[v] != 0) continue;
      if (best == n || seen[v].size() > seen[best].size() ||
          (seen[v].size() == seen[best].size() && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    const int c = smallest_free_color(g, coloring, best, scratch);
    coloring[best] = c;
    for (std::size_t w : g.neighbors(best)) {
      auto& s = seen[w];
      auto it = std::lower_bound(s.begin(), s.end(), c);
      if (it == s.end() || *it != c) s.insert(it, c);
    }
  }
  return coloring;
}

namespace {

struct TimedOut {};

class ColorabilitySearch {
 public:
  ColorabilitySearch(const Graph& g, int colors, const SolverOptions& options)
      : g_(g),
        colors_(colors),
        color_(g.size(), 0),
        forbid_(g.size() * static_cast<std::size_t>(colors + 1), 0),
        saturation_(g.size(), 0),
        position_(g.size(), 0),
        stamp_(g.size(), 0),
        has_deadline_(options.timeout.count() > 0),
        deadline_(std::chrono::steady_clock::now() + options.timeout) {}

  ColorabilityResult run() {
    ColorabilityResult result;
    if (g_.size() == 0) {
      result.status = ColorabilityStatus::colorable;
      return result;
    }
    if (colors_ <= 0) {
      result.status = ColorabilityStatus::not_colorable;
      return result;
    }
    buffer_.resize(g_.size());
    std::iota(buffer_.begin(), buffer_.end(), 0);
    for (std::size_t i = 0; i < buffer_.size(); ++i) position_[buffer_[i]] = i;
    try {
      const bool ok = solve_all(0, buffer_.size());
      result.status = ok ? ColorabilityStatus::colorable : ColorabilityStatus::not_colorable;
      if (ok) result.witness = color_;
    } catch (const TimedOut&) {
      result.status = ColorabilityStatus::timed_out;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  int& forbid(std::size_t v, int c) { return forbid_[v * static_cast<std::size_t>(colors_ + 1) + c]; }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    trail_.push_back(v);
    for (std::size_t w : g_.neighbors(v)) {
      if (forbid(w, c)++ == 0) ++saturation_[w];
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t v = trail_.back();
      trail_.pop_back();
      const int c = color_[v];
      for (std::size_t w : g_.neighbors(v)) {
        if (--forbid(w, c) == 0) --saturation_[w];
      }
      color_[v] = 0;
    }
  }

  void place(std::size_t v, std::size_t at) {
    const std::size_t from = position_[v];
    std::swap(buffer_[from], buffer_[at]);
    position_[buffer_[from]] = from;
    position_[buffer_[at]] = at;
  }

  // Splits buffer_[begin, end) into contiguous connected components of the
  // uncolored subgraph and solves each; the first failure is final.
  bool solve_all(std::size_t begin, std::size_t end) {
    ++epoch_;
    for (std::size_t i = begin; i < end; ++i) stamp_[buffer_[i]] = epoch_;
    const std::uint64_t visited = ++epoch_;
    std::vector<std::pair<std::size_t, std::size_t>> parts;
    std::size_t write = begin;
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t seed = buffer_[i];
      if (stamp_[seed] == visited) continue;
      const std::size_t start = write;
      place(seed, write++);
      stamp_[seed] = visited;
      for (std::size_t head = start; head < write; ++head) {
        for (std::size_t w : g_.neighbors(buffer_[head])) {
          if (stamp_[w] + 1 == visited) {
            stamp_[w] = visited;
            place(w, write++);
          }
        }
      }
      parts.emplace_back(start, write);
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      return a.second - a.first < b.second - b.first;
    });
    for (const auto& [lo, hi] : parts) {
      if (!solve_component(lo, hi)) return false;
    }
    return true;
  }

  bool solve_component(std::size_t begin, std::size_t end) {
    if (++nodes_ % 1024 == 0 && has_deadline_ && std::chrono::steady_clock::now() > deadline_) {
      throw TimedOut{};
    }
    // Pick the vertex of maximum saturation, then maximum uncolored degree.
    std::size_t best = buffer_[begin];
    int best_sat = -1;
    std::size_t best_deg = 0;
    std::vector<char> touched(static_cast<std::size_t>(colors_ + 1), 0);
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t v = buffer_[i];
      if (saturation_[v] > 0) {
        for (int c = 1; c <= colors_; ++c) {
          if (forbid(v, c) > 0) touched[c] = 1;
        }
      }
      if (saturation_[v] < best_sat) continue;
      std::size_t deg = 0;
      for (std::size_t w : g_.neighbors(v)) deg += color_[w] == 0 ? 1 : 0;
      if (saturation_[v] > best_sat || deg > best_deg || (deg == best_deg && v < best)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = deg;
      }
    }
    if (best_sat >= colors_) return false;

    place(best, end - 1);
    const std::size_t mark = trail_.size();
    bool fresh_tried = false;
    for (int c = 1; c <= colors_; ++c) {
      if (forbid(best, c) > 0) continue;
      if (!touched[c]) {
        if (fresh_tried) continue;
        fresh_tried = true;
      }
      assign(best, c);
      if (solve_all(begin, end - 1)) return true;
      undo_to(mark);
    }
    return false;
  }

  const Graph& g_;
  int colors_;
  Coloring color_;
  std::vector<int> forbid_;
  std::vector<int> saturation_;
  std::vector<std::size_t> buffer_;
  std::vector<std::size_t> position_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::size_t> trail_;
  std::uint64_t nodes_ = 0;
  bool has_deadline_;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

ColorabilityResult k_colorable(const Graph& g, int colors, const SolverOptions& options) {
  return ColorabilitySearch(g, colors, options).run();
}

ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options) {
  ChromaticResult result;
  if (g.size() == 0) {
    result.certificate.kind = LowerBoundCertificate::Kind::clique;
    return result;
  }
  const auto start = std::chrono::steady_clock::now();
  result.witness = dsatur_coloring(g);
  result.upper = color_count(result.witness);
  result.certificate.clique = maximum_clique(g);
  result.lower = static_cast<int>(result.certificate.clique.size());

  for (int c = result.lower; c < result.upper; ++c) {
    SolverOptions remaining;
    if (options.timeout.count() > 0) {
      const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      remaining.timeout = options.timeout - spent;
      if (remaining.timeout.count() <= 0) {
        result.timed_out = true;
        return result;
      }
    }
    const ColorabilityResult r = k_colorable(g, c, remaining);
    result.nodes += r.nodes;
    if (r.status == ColorabilityStatus::timed_out) {
      result.timed_out = true;
      return result;
    }
    if (r.status == ColorabilityStatus::colorable) {
      result.upper = c;
      result.witness = r.witness;
      break;
    }
    result.lower = c + 1;
    result.certificate.kind = LowerBoundCertificate::Kind::exhausted_search;
    result.certificate.refuted_colors = c;
  }
  result.lower = result.upper;
  return result;
}

std::uint64_t for_each_proper_coloring(const Graph& g, int max_colors,
                                       const std::function<bool(const Coloring&)>& visit) {
  const std::size_t n = g.size();
  Coloring coloring(n, 0);
  std::uint64_t count = 0;
  bool stop = false;
  // Recursive lambda over vertex index with the current number of colors.
  auto rec = [&](auto&& self, std::size_t v, int used) -> void {
    if (stop) return;
    if (v == n) {
      ++count;
      if (!visit(coloring)) stop = true;
      return;
    }
    const int limit = std::min(used + 1, max_colors);
    for (int c = 1; c <= limit && !stop; ++c) {
      bool ok = true;
      for (std::size_t w : g.neighbors(v)) {
        if (w < v && coloring[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      coloring[v] = c;
      self(self, v + 1, std::max(used, c));
      coloring[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return count;
}

ProbeColorAudit probe_coloring_audit(const Graph& g, std::span<const std::vector<std::size_t>> pierced_sets,
                                     const Coloring& coloring) {
  if (!verify_coloring(g, coloring)) throw std::invalid_argument("probe audit needs a proper coloring");
  ProbeColorAudit audit;
  for (std::size_t p = 0; p < pierced_sets.size(); ++p) {
    std::vector<int> colors;
    for (std::size_t v : pierced_sets[p]) colors.push_back(coloring.at(v));
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    if (colors.size() > audit.max_count) {
      audit.max_count = colors.size();
      audit.witness_probe = p;
    }
    audit.colors_per_probe.push_back(std::move(colors));
  }
  return audit;
}

}  // namespace trifree

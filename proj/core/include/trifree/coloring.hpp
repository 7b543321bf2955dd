#pragma once

#include "trifree/graph.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace trifree {

/// Color of each vertex, 1-based; 0 marks an uncolored vertex.
using Coloring = std::vector<int>;

/// Complete (no zeros) and proper.
bool verify_coloring(const Graph& g, const Coloring& coloring);
int color_count(const Coloring& coloring);

/// First-fit along `order` (a permutation of the vertices).
Coloring greedy_coloring(const Graph& g, std::span<const std::size_t> order);
Coloring greedy_coloring(const Graph& g);
/// Greedy by maximum saturation degree, ties by degree then index.
Coloring dsatur_coloring(const Graph& g);

struct SolverOptions {
  /// Zero means no limit.
  std::chrono::milliseconds timeout{0};
};

enum class ColorabilityStatus { colorable, not_colorable, timed_out };

struct ColorabilityResult {
  ColorabilityStatus status = ColorabilityStatus::timed_out;
  Coloring witness;  ///< set when colorable
  std::uint64_t nodes = 0;
};

/// Exact decision: does g admit a proper coloring with `colors` colors?
/// Backtracking on saturation degree; uncolored components are solved
/// independently and interchangeable unused colors are tried once.
ColorabilityResult k_colorable(const Graph& g, int colors, const SolverOptions& options = {});

struct LowerBoundCertificate {
  enum class Kind { clique, exhausted_search } kind = Kind::clique;
  std::vector<std::size_t> clique;  ///< for Kind::clique
  int refuted_colors = 0;           ///< for Kind::exhausted_search: no coloring with this many colors
};

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  Coloring witness;  ///< proper coloring with `upper` colors
  LowerBoundCertificate certificate;
  std::uint64_t nodes = 0;
  bool timed_out = false;

  bool exact() const { return lower == upper; }
};

/// Exact chromatic number. On timeout the result holds the best proven
/// interval [lower, upper] and timed_out is set.
ChromaticResult chromatic_number(const Graph& g, const SolverOptions& options = {});

/// Visits each proper coloring with at most `max_colors` colors once up to
/// renaming of colors (colors numbered in order of first use along vertex
/// order). The visitor returns false to stop early. Returns the number of
/// colorings visited.
std::uint64_t for_each_proper_coloring(const Graph& g, int max_colors,
                                       const std::function<bool(const Coloring&)>& visit);

struct ProbeColorAudit {
  std::vector<std::vector<int>> colors_per_probe;  ///< sorted distinct colors on each pierced set
  std::size_t max_count = 0;
  std::size_t witness_probe = 0;  ///< a probe attaining max_count
};

/// Throws std::invalid_argument if the coloring is not proper.
ProbeColorAudit probe_coloring_audit(const Graph& g, std::span<const std::vector<std::size_t>> pierced_sets,
                                     const Coloring& coloring);

}  // namespace trifree

#pragma once

#include "trifree/independent.hpp"
#include "trifree/probe.hpp"
#include "trifree/shapes.hpp"

#include <memory>
#include <vector>

namespace trifree {

/// Quantities derived while building one recursion level of the
/// homothetic construction.
struct UniformParams {
  int k = 0;
  Rat epsilon;
  Rat s_min;          ///< smallest root width among the inner probes
  Rat s_max;          ///< largest root width among the inner probes
  Rat m;              ///< (epsilon/8) s_min, how far each diagonal sticks out
  Rat epsilon1;       ///< 2m / s_max
  Rat side;           ///< side of the smallest square containing the helper family
  Rat t;              ///< smallest upper or lower root
  Rat outer_epsilon;  ///< epsilon t / (2 side)
};

struct DiagonalCheck {
  int k = 0;
  Rat epsilon;
  std::size_t probe = 0;
  bool sticks_out_by_m = false;
  bool empty_square_right_of_box = false;
  bool meets_root = false;
  bool shift_bound = false;  ///< (epsilon/8) s + m <= (epsilon/2)(s/2)

  bool ok() const { return sticks_out_by_m && empty_square_right_of_box && meets_root && shift_bound; }
};

struct UniformLevel {
  int k = 0;
  Rat epsilon;
  std::shared_ptr<const AnchoredShape> anchored;
  std::vector<TransformedCopy> family;
  /// Epsilon-probes: width == (1 + epsilon) height and a square root.
  std::vector<Probe> probes;
  /// Parameters of every nested build with k >= 2, innermost first.
  std::vector<UniformParams> params;
  std::vector<DiagonalCheck> diagonal_report;
  std::vector<ContactLawCheck> audits;
};

/// F(k, epsilon) and P(k, epsilon) of homothets of `anchored`. Every
/// verified claim (probe conditions 1-5, diagonal checks, contact laws,
/// homothety, sizes, triangle-freeness) throws ConstructionError on failure.
/// Throws std::invalid_argument unless k >= 1 and 0 < epsilon < 1.
UniformLevel build_uniform(int k, const Rat& epsilon, std::shared_ptr<const AnchoredShape> anchored);

/// Epsilon-probe with square root flush with the bottom-left corner of
/// `root_square`, reaching the right side of `bbox`. Throws
/// std::invalid_argument unless root_square is a proper square with
/// 0 <= d <= epsilon * side, d the gap to bbox's right side.
Probe carve_probe(const Rect& root_square, const Rat& epsilon, const Rect& bbox);

/// The per-diagonal checks collected during the build; empty for k = 1.
const std::vector<DiagonalCheck>& diagonal_checks(const UniformLevel& level);

/// Family plus one homothetic diagonal per probe: bounding square of side
/// h (the probe height) over the probe's y-range, left side at
/// root_cut_x - (1 - epsilon) h / 2.
std::vector<TransformedCopy> augment_uniform(const UniformLevel& level);

/// Neighbours of each appended diagonal must equal its probe's pierced set.
std::vector<ContactLawCheck> uniform_augmentation_audit(const UniformLevel& level,
                                                        std::span<const TransformedCopy> augmented);

}  // namespace trifree

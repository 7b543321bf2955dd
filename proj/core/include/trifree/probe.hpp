#pragma once

#include "trifree/shapes.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace trifree {

/// Axis-aligned rectangle touching the right side of its family's bounding
/// box, whose left part up to root_cut_x (the root) is empty.
struct Probe {
  Rect rect;
  Rect root;
  Rat root_cut_x;
  std::vector<std::size_t> pierced;  ///< sorted ids of copies meeting rect

  friend bool operator==(const Probe&, const Probe&) = default;
};

/// Sorted ids of copies that meet r.
std::vector<std::size_t> pierced_by(std::span<const TransformedCopy> family, const Rect& r);

enum class ProbeCondition {
  well_formed,       // proper rectangle, accurate pierced list, disjoint from other probes
  right_side,        // inside the family's bounding box and touching its right side
  pierced_disjoint,  // pierced copies pairwise disjoint
  stabs,             // every pierced copy stabs the probe vertically
  root,              // root is the part left of the cut and meets no copy
  aspect,            // width / height == 1 + epsilon
};

std::string to_string(ProbeCondition c);

struct ProbeViolation {
  std::size_t probe = 0;
  ProbeCondition condition = ProbeCondition::well_formed;
  std::string detail;
};

struct ProbeCheckOptions {
  /// Also require width == (1 + aspect_epsilon) * height and a square root.
  bool check_aspect = false;
  Rat aspect_epsilon;
};

/// Checks every probe condition exactly against `family`, that each stored
/// pierced list is accurate, and that probes are pairwise disjoint.
std::vector<ProbeViolation> check_probes(std::span<const TransformedCopy> family, std::span<const Probe> probes,
                                         const ProbeCheckOptions& options = {});

/// Top and bottom 2/5 of the rect's height; the middle fifth separates them.
struct ProbeSplit {
  Rect upper;
  Rect lower;
};
ProbeSplit split_probe(const Probe& p);

/// Same probe with every coordinate moved by t; pierced ids shifted by offset.
Probe transform_probe(const Probe& p, const XYTransform& t, std::size_t offset = 0);

}  // namespace trifree

#pragma once

#include "trifree/document.hpp"

#include <string>

namespace trifree {

struct SvgOptions {
  double width = 800;  ///< viewBox width; height follows the family's aspect ratio
  bool probes = true;  ///< draw probes and their roots
};

/// Deterministic SVG: y grows upward in family coordinates, diagonals are
/// drawn in a second colour, probes as translucent rectangles.
std::string render_svg(const FamilyDocument& doc, const SvgOptions& options = {});

}  // namespace trifree

#include "trifree/probe.hpp"

#include <algorithm>

namespace trifree {

std::vector<std::size_t> pierced_by(std::span<const TransformedCopy> family, const Rect& r) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (copy_meets_rect(family[i], r)) ids.push_back(i);
  }
  return ids;
}

std::string to_string(ProbeCondition c) {
  switch (c) {
    case ProbeCondition::well_formed: return "well-formed";
    case ProbeCondition::right_side: return "right-side";
    case ProbeCondition::pierced_disjoint: return "pierced-disjoint";
    case ProbeCondition::stabs: return "stabs";
    case ProbeCondition::root: return "root";
    case ProbeCondition::aspect: return "aspect";
  }
  return "?";
}

std::vector<ProbeViolation> check_probes(std::span<const TransformedCopy> family, std::span<const Probe> probes,
                                         const ProbeCheckOptions& options) {
  std::vector<ProbeViolation> out;
  if (family.empty()) return out;
  const Rect box = family_bbox(family);
  auto fail = [&](std::size_t p, ProbeCondition condition, std::string detail) {
    out.push_back({p, condition, std::move(detail)});
  };

  for (std::size_t p = 0; p < probes.size(); ++p) {
    const Probe& probe = probes[p];
    const Rect& r = probe.rect;
    if (!r.is_proper()) fail(p, ProbeCondition::well_formed, "probe rectangle is degenerate");
    if (!rect_within(r, box) || r.x_hi != box.x_hi) fail(p, ProbeCondition::right_side, "not inside the bounding box touching its right side");

    const auto ids = pierced_by(family, r);
    if (ids != probe.pierced) fail(p, ProbeCondition::well_formed, "stored pierced list differs from the geometric one");
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (copies_intersect(family[ids[a]], family[ids[b]])) {
          fail(p, ProbeCondition::pierced_disjoint, "pierced copies " + std::to_string(ids[a]) + " and " + std::to_string(ids[b]) + " intersect");
        }
      }
    }
    if (r.is_proper()) {
      for (std::size_t id : ids) {
        if (!stabs_vertically(family[id], r)) fail(p, ProbeCondition::stabs, "copy " + std::to_string(id) + " does not stab vertically");
      }
    }

    const Rect expected_root(r.x_lo, probe.root_cut_x, r.y_lo, r.y_hi);
    if (!(r.x_lo < probe.root_cut_x && probe.root_cut_x <= r.x_hi) || probe.root != expected_root) {
      fail(p, ProbeCondition::root, "root is not the part of the probe left of the cut");
    } else if (!pierced_by(family, probe.root).empty()) {
      fail(p, ProbeCondition::root, "root meets a copy");
    }

    if (options.check_aspect) {
      if (r.width() != (Rat(1) + options.aspect_epsilon) * r.height()) fail(p, ProbeCondition::aspect, "width/height is not 1+epsilon");
      if (!probe.root.is_square()) fail(p, ProbeCondition::root, "root is not a square");
    }
  }

  for (std::size_t a = 0; a < probes.size(); ++a) {
    for (std::size_t b = a + 1; b < probes.size(); ++b) {
      if (rects_meet(probes[a].rect, probes[b].rect)) {
        fail(a, ProbeCondition::well_formed, "probes " + std::to_string(a) + " and " + std::to_string(b) + " are not disjoint");
      }
    }
  }
  return out;
}

ProbeSplit split_probe(const Probe& p) {
  const Rect& r = p.rect;
  const Rat h = r.height();
  const Rat two_fifths = h * Rat(2, 5);
  return {Rect(r.x_lo, r.x_hi, r.y_hi - two_fifths, r.y_hi), Rect(r.x_lo, r.x_hi, r.y_lo, r.y_lo + two_fifths)};
}

Probe transform_probe(const Probe& p, const XYTransform& t, std::size_t offset) {
  Probe out{t.apply(p.rect), t.apply(p.root), t.apply_x(p.root_cut_x), p.pierced};
  for (auto& id : out.pierced) id += offset;
  return out;
}

}  // namespace trifree

#include "trifree/uniform.hpp"

#include "trifree/graph.hpp"

#include <algorithm>

namespace trifree {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void verify_level(const UniformLevel& level) {
  const std::string tag = "uniform level " + std::to_string(level.k) + " (epsilon " + level.epsilon.str() + ")";
  const SizeCounts counts = size_formulas(level.k);
  require(BigInt(static_cast<unsigned long>(level.family.size())) == counts.s, tag + ": family size differs from s_k");
  require(BigInt(static_cast<unsigned long>(level.probes.size())) == counts.p, tag + ": probe count differs from p_k");
  for (const auto& c : level.family) require(c.transform().is_homothety(), tag + ": copy is not a homothet");
  const auto violations = check_probes(level.family, level.probes, {true, level.epsilon});
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw ConstructionError(tag + " probe " + std::to_string(v.probe) + " " + to_string(v.condition) +
                            ": " + v.detail);
  }
  require(is_triangle_free(intersection_graph(level.family)), tag + ": family has a triangle");
}

UniformLevel base_level(const Rat& epsilon, std::shared_ptr<const AnchoredShape> anchored) {
  UniformLevel level;
  level.k = 1;
  level.epsilon = epsilon;
  level.anchored = anchored;
  level.family.emplace_back(anchored->shape, XYTransform::identity(), Lineage{LineageKind::base, 0});
  const Rect e = anchored->empty_square(epsilon);
  const Rect box = family_bbox(level.family);
  Probe probe{Rect(e.x_lo, box.x_hi, e.y_lo, e.y_hi), e, e.x_hi, {}};
  probe.pierced = pierced_by(level.family, probe.rect);
  level.probes.push_back(std::move(probe));
  verify_level(level);
  return level;
}

void append(std::vector<UniformParams>& out, std::vector<UniformParams>&& in) {
  out.insert(out.end(), std::make_move_iterator(in.begin()), std::make_move_iterator(in.end()));
}

}  // namespace

Probe carve_probe(const Rect& root_square, const Rat& epsilon, const Rect& bbox) {
  if (!root_square.is_proper() || !root_square.is_square()) {
    throw std::invalid_argument("carve_probe needs a proper square");
  }
  const Rat a = root_square.width();
  const Rat d = bbox.x_hi - root_square.x_hi;
  if (d.sign() < 0 || d > epsilon * a) throw std::invalid_argument("root square is too far from the right side");
  const Rat h = (a + d) / (Rat(1) + epsilon);
  const Rect rect(root_square.x_lo, bbox.x_hi, root_square.y_lo, root_square.y_lo + h);
  const Rat cut = root_square.x_lo + h;
  return Probe{rect, Rect(rect.x_lo, cut, rect.y_lo, rect.y_hi), cut, {}};
}

UniformLevel build_uniform(int k, const Rat& epsilon, std::shared_ptr<const AnchoredShape> anchored) {
  if (k < 1) throw std::invalid_argument("build_uniform needs k >= 1");
  if (!(epsilon.sign() > 0 && epsilon < Rat(1))) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (!anchored) throw std::invalid_argument("shape has no anchored representative");
  if (!validate_anchor(*anchored, epsilon).empty()) throw std::invalid_argument("anchored rules fail at epsilon");
  if (k == 1) return base_level(epsilon, anchored);

  const Rat eighth = epsilon / 8;
  UniformLevel f0 = build_uniform(k - 1, eighth, anchored);
  const Rect box0 = family_bbox(f0.family);

  UniformParams params;
  params.k = k;
  params.epsilon = epsilon;
  params.s_min = f0.probes.front().root.width();
  params.s_max = params.s_min;
  for (const auto& p : f0.probes) {
    params.s_min = std::min(params.s_min, p.root.width());
    params.s_max = std::max(params.s_max, p.root.width());
  }
  params.m = eighth * params.s_min;
  params.epsilon1 = Rat(2) * params.m / params.s_max;
  require(params.epsilon1 <= epsilon / 2, "epsilon1 exceeds epsilon/2");
  require(validate_anchor(*anchored, params.epsilon1).empty(), "anchored rules fail at epsilon1");

  UniformLevel level;
  level.k = k;
  level.epsilon = epsilon;
  level.anchored = anchored;
  level.params = std::move(f0.params);
  level.diagonal_report = std::move(f0.diagonal_report);
  level.audits = std::move(f0.audits);

  // Helper family: F0 followed by one diagonal per probe.
  const std::size_t s0 = f0.family.size();
  std::vector<TransformedCopy> helper = f0.family;
  std::vector<Rect> upper_roots;
  std::vector<Rect> lower_roots;
  for (std::size_t j = 0; j < f0.probes.size(); ++j) {
    const Rect& root = f0.probes[j].root;
    const Rat s = root.width();
    const Rat half = s / 2;
    const Rat shift = eighth * s + params.m;
    const XYTransform place = XYTransform::homothety(half, root.x_lo + half + shift, root.y_lo + half);
    TransformedCopy d(anchored->shape, place, {LineageKind::diagonal, j});
    const Rect empty = place.apply(anchored->empty_square(params.epsilon1));

    DiagonalCheck check;
    check.k = k;
    check.epsilon = epsilon;
    check.probe = j;
    check.sticks_out_by_m = d.bbox().x_hi - box0.x_hi == params.m;
    check.empty_square_right_of_box = empty.x_lo > box0.x_hi;
    check.meets_root = copy_meets_rect(d, root);
    check.shift_bound = shift <= (epsilon / 2) * half;
    require(check.ok(), "diagonal " + std::to_string(j) + " fails its placement checks at level " + std::to_string(k));
    level.diagonal_report.push_back(check);

    helper.push_back(std::move(d));
    upper_roots.push_back(empty);
    lower_roots.emplace_back(root.x_lo + half, root.x_hi, root.y_lo, root.y_lo + half);
  }
  for (std::size_t j = 0; j < f0.probes.size(); ++j) {
    level.audits.push_back({k, ContactLaw::diagonal, j, f0.probes[j].pierced, neighbors_in_family(helper, s0 + j)});
    require(level.audits.back().holds(), "diagonal contact law fails at level " + std::to_string(k));
    require(pierced_by(helper, upper_roots[j]).empty() && pierced_by(helper, lower_roots[j]).empty(),
            "upper or lower root meets the helper family");
  }

  const Rect helper_box = family_bbox(helper);
  params.side = std::max(helper_box.width(), helper_box.height());
  params.t = upper_roots.front().width();
  for (std::size_t j = 0; j < upper_roots.size(); ++j) {
    params.t = std::min({params.t, upper_roots[j].width(), lower_roots[j].width()});
  }
  params.outer_epsilon = epsilon * params.t / (Rat(2) * params.side);

  UniformLevel outer = build_uniform(k - 1, params.outer_epsilon, anchored);
  append(level.params, std::move(outer.params));
  level.diagonal_report.insert(level.diagonal_report.end(), outer.diagonal_report.begin(),
                               outer.diagonal_report.end());
  level.audits.insert(level.audits.end(), outer.audits.begin(), outer.audits.end());
  level.params.push_back(params);

  const Rect box = family_bbox(outer.family);
  for (const auto& c : outer.family) level.family.push_back(c.relabeled({LineageKind::outer, 0}));

  std::vector<XYTransform> placements;
  for (std::size_t i = 0; i < outer.probes.size(); ++i) {
    const Rect& r = outer.probes[i].root;
    const Rat scale = r.width() / params.side;
    const XYTransform place = XYTransform::homothety(
        scale, r.x_hi - scale * helper_box.x_hi,
        (r.y_lo + r.y_hi) / 2 - scale * (helper_box.y_lo + helper_box.y_hi) / 2);
    require(rect_within(place.apply(helper_box), r), "inner family does not fit its root");
    for (const auto& c : helper) level.family.push_back(c.moved(place, {LineageKind::inner, i}));
    placements.push_back(place);
  }
  require(family_bbox(level.family) == box, "inner families leave the outer bounding box");

  // One epsilon-probe per upper and lower root of every inner family.
  const std::size_t helper_size = helper.size();
  for (std::size_t i = 0; i < outer.probes.size(); ++i) {
    const Probe& op = outer.probes[i];
    const std::size_t offset = outer.family.size() + i * helper_size;
    const XYTransform& inner_place = placements[i];
    for (std::size_t q = 0; q < f0.probes.size(); ++q) {
      Probe up = carve_probe(inner_place.apply(upper_roots[q]), epsilon, box);
      up.pierced = pierced_by(level.family, up.rect);
      level.audits.push_back(
          {k, ContactLaw::upper_probe, level.probes.size(), sorted_union(op.pierced, {offset + s0 + q}), up.pierced});
      level.probes.push_back(std::move(up));

      Probe low = carve_probe(inner_place.apply(lower_roots[q]), epsilon, box);
      low.pierced = pierced_by(level.family, low.rect);
      std::vector<std::size_t> inner_pierced = f0.probes[q].pierced;
      for (auto& id : inner_pierced) id += offset;
      level.audits.push_back(
          {k, ContactLaw::lower_probe, level.probes.size(), sorted_union(op.pierced, inner_pierced), low.pierced});
      std::vector<std::size_t> diag_hit;
      if (copy_meets_rect(level.family[offset + s0 + q], low.rect)) diag_hit.push_back(offset + s0 + q);
      level.audits.push_back({k, ContactLaw::lower_avoids_diagonal, level.probes.size(), {}, std::move(diag_hit)});
      level.probes.push_back(std::move(low));
    }
  }
  for (const auto& a : level.audits) {
    if (a.level == k && !a.holds()) {
      throw ConstructionError("uniform level " + std::to_string(k) + " " + to_string(a.law) + " law fails at " +
                              std::to_string(a.subject));
    }
  }
  verify_level(level);
  return level;
}

const std::vector<DiagonalCheck>& diagonal_checks(const UniformLevel& level) { return level.diagonal_report; }

std::vector<TransformedCopy> augment_uniform(const UniformLevel& level) {
  std::vector<TransformedCopy> out = level.family;
  const Rat lead = (Rat(1) - level.epsilon) / 2;
  for (std::size_t j = 0; j < level.probes.size(); ++j) {
    const Probe& p = level.probes[j];
    const Rat h = p.rect.height();
    out.emplace_back(level.anchored->shape, XYTransform::homothety(h, p.root_cut_x - lead * h, p.rect.y_lo),
                     Lineage{LineageKind::diagonal, j});
  }
  return out;
}

std::vector<ContactLawCheck> uniform_augmentation_audit(const UniformLevel& level,
                                                        std::span<const TransformedCopy> augmented) {
  std::vector<ContactLawCheck> out;
  const std::size_t s = level.family.size();
  for (std::size_t j = 0; j < level.probes.size() && s + j < augmented.size(); ++j) {
    out.push_back({level.k + 1, ContactLaw::diagonal, j, level.probes[j].pierced, neighbors_in_family(augmented, s + j)});
  }
  return out;
}

}  // namespace trifree

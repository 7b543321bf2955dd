#include "trifree/independent.hpp"

#include "trifree/graph.hpp"

#include <algorithm>
#include <iterator>

namespace trifree {

SizeCounts size_formulas(int k) {
  if (k < 1) throw std::invalid_argument("size_formulas needs k >= 1");
  BigInt s = 1;
  BigInt p = 1;
  for (int i = 1; i < k; ++i) {
    BigInt next_s = (p + 1) * s + p * p;
    p = 2 * p * p;
    s = std::move(next_s);
  }
  return {s, p};
}

bool size_bound_holds(int k) {
  const SizeCounts c = size_formulas(k);
  BigInt power_p;
  BigInt power_s;
  BigInt one = 1;
  const unsigned long e = 1ul << (k - 1);
  mpz_mul_2exp(power_p.get_mpz_t(), one.get_mpz_t(), e - 1);
  mpz_mul_2exp(power_s.get_mpz_t(), one.get_mpz_t(), e);
  return c.p == power_p && c.p <= c.s && c.s <= power_s - 1;
}

std::string to_string(ContactLaw law) {
  switch (law) {
    case ContactLaw::diagonal:
      return "diagonal";
    case ContactLaw::upper_probe:
      return "upper-probe";
    case ContactLaw::lower_probe:
      return "lower-probe";
    case ContactLaw::lower_avoids_diagonal:
      return "lower-avoids-diagonal";
  }
  return "unknown";
}

namespace {

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<std::size_t> neighbours_of(std::span<const TransformedCopy> family, std::size_t v) {
  return neighbors_in_family(family, v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(what);
}

void require_probes(std::span<const TransformedCopy> family, std::span<const Probe> probes, int k) {
  const auto violations = check_probes(family, probes);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw ConstructionError("level " + std::to_string(k) + " probe " + std::to_string(v.probe) + " " +
                            to_string(v.condition) + ": " + v.detail);
  }
}

void require_triangle_free(std::span<const TransformedCopy> family, int k) {
  if (auto t = find_triangle(intersection_graph(family))) {
    throw ConstructionError("level " + std::to_string(k) + " has a triangle at copies " + std::to_string((*t)[0]) +
                            ", " + std::to_string((*t)[1]) + ", " + std::to_string((*t)[2]));
  }
}

// Middle half of r in both directions.
Rect middle_half(const Rect& r) {
  const Rat dx = r.width() / 4;
  const Rat dy = r.height() / 4;
  return Rect(r.x_lo + dx, r.x_hi - dx, r.y_lo + dy, r.y_hi - dy);
}

ConstructionLevel base_level(const CatalogEntry& entry) {
  ConstructionLevel level;
  level.k = 1;
  level.entry = entry;
  level.family.emplace_back(entry.shape, XYTransform::identity(), Lineage{LineageKind::base, 0});
  const Rect& e = entry.features.empty_rect;
  const Rect& u = entry.features.bbox;
  Probe probe{Rect(e.x_lo, u.x_hi, e.y_lo, e.y_hi), e, e.x_hi, {}};
  probe.pierced = pierced_by(level.family, probe.rect);
  level.probes.push_back(std::move(probe));
  require_probes(level.family, level.probes, 1);
  return level;
}

}  // namespace

TransformedCopy make_diagonal(const Probe& p, const CatalogEntry& entry, const Rect& family_box, Lineage lineage) {
  const ShapeFeatures& f = entry.features;
  const Rect upper = split_probe(p).upper;
  const XYTransform fit = XYTransform::mapping(f.bbox, upper);
  const Rat stretch = Rat(2) * f.w2 / f.w1;
  const XYTransform widen(stretch, Rat(1), upper.x_lo * (Rat(1) - stretch), Rat(0));
  TransformedCopy d(entry.shape, widen.after(fit), lineage);

  const Rect empty = d.transform().apply(f.empty_rect);
  require(empty.x_lo > family_box.x_hi, "diagonal empty rectangle is not right of the family");
  const auto stabber = apply_all(d.transform(), f.left_stabber);
  require(stabs_horizontally(stabber, upper), "diagonal left stabber does not stab the upper part");
  return d;
}

ConstructionLevel build(int k, const CatalogEntry& entry) {
  if (k < 1) throw std::invalid_argument("build needs k >= 1");
  if (!validate_features(*entry.shape, entry.features).empty()) {
    throw std::invalid_argument("shape features of '" + entry.shape->name() + "' are invalid");
  }
  if (k == 1) return base_level(entry);

  ConstructionLevel prev = build(k - 1, entry);
  const std::size_t s = prev.family.size();
  const std::size_t p = prev.probes.size();
  const Rect box = family_bbox(prev.family);

  ConstructionLevel level;
  level.k = k;
  level.entry = entry;
  level.audits = std::move(prev.audits);

  // Helper family: F(k-1) followed by its diagonals.
  std::vector<TransformedCopy> helper = prev.family;
  for (std::size_t j = 0; j < p; ++j) {
    helper.push_back(make_diagonal(prev.probes[j], entry, box, {LineageKind::diagonal, j}));
  }
  for (std::size_t j = 0; j < p; ++j) {
    auto expected = pierced_by(std::span(helper).first(s), split_probe(prev.probes[j]).upper);
    level.audits.push_back({k, ContactLaw::diagonal, j, std::move(expected), neighbours_of(helper, s + j)});
  }
  const Rect helper_box = family_bbox(helper);

  for (const auto& c : prev.family) level.family.push_back(c.relabeled({LineageKind::outer, 0}));

  struct Inner {
    std::size_t offset;
    std::vector<Probe> probes;
  };
  std::vector<Inner> inners;
  for (std::size_t i = 0; i < p; ++i) {
    const XYTransform place = XYTransform::mapping(helper_box, middle_half(prev.probes[i].root));
    Inner inner{level.family.size(), {}};
    for (const auto& c : helper) level.family.push_back(c.moved(place, {LineageKind::inner, i}));
    for (const auto& q : prev.probes) inner.probes.push_back(transform_probe(q, place, inner.offset));
    inners.push_back(std::move(inner));
  }
  require(family_bbox(level.family) == box, "inner families leave the outer bounding box");

  const ShapeFeatures& f = entry.features;
  for (std::size_t i = 0; i < p; ++i) {
    const auto& outer_pierced = prev.probes[i].pierced;
    for (std::size_t q = 0; q < p; ++q) {
      const Probe& inner_probe = inners[i].probes[q];
      const std::size_t diag = inners[i].offset + s + q;
      const Rect empty = level.family[diag].transform().apply(f.empty_rect);

      Probe upper{Rect(empty.x_lo, box.x_hi, empty.y_lo, empty.y_hi), empty, empty.x_hi, {}};
      upper.pierced = pierced_by(level.family, upper.rect);
      const std::size_t idx = level.probes.size();
      level.audits.push_back({k, ContactLaw::upper_probe, idx, sorted_union(outer_pierced, {diag}), upper.pierced});

      const Rect low = split_probe(inner_probe).lower;
      Probe lower{Rect(inner_probe.rect.x_lo, box.x_hi, low.y_lo, low.y_hi),
                  Rect(inner_probe.rect.x_lo, inner_probe.root_cut_x, low.y_lo, low.y_hi), inner_probe.root_cut_x, {}};
      lower.pierced = pierced_by(level.family, lower.rect);
      level.audits.push_back(
          {k, ContactLaw::lower_probe, idx + 1, sorted_union(outer_pierced, inner_probe.pierced), lower.pierced});
      std::vector<std::size_t> diag_hit;
      if (copy_meets_rect(level.family[diag], lower.rect)) diag_hit.push_back(diag);
      level.audits.push_back({k, ContactLaw::lower_avoids_diagonal, idx + 1, {}, std::move(diag_hit)});

      level.probes.push_back(std::move(upper));
      level.probes.push_back(std::move(lower));
    }
  }

  const SizeCounts counts = size_formulas(k);
  require(BigInt(static_cast<unsigned long>(level.family.size())) == counts.s, "family size differs from s_k");
  require(BigInt(static_cast<unsigned long>(level.probes.size())) == counts.p, "probe count differs from p_k");
  for (const auto& a : level.audits) {
    if (a.level == k && !a.holds()) {
      throw ConstructionError("level " + std::to_string(k) + " " + to_string(a.law) + " law fails at " +
                              std::to_string(a.subject));
    }
  }
  require_probes(level.family, level.probes, k);
  require_triangle_free(level.family, k);
  return level;
}

std::vector<TransformedCopy> augment(const ConstructionLevel& level) {
  std::vector<TransformedCopy> out = level.family;
  const Rect box = family_bbox(level.family);
  for (std::size_t j = 0; j < level.probes.size(); ++j) {
    out.push_back(make_diagonal(level.probes[j], level.entry, box, {LineageKind::diagonal, j}));
  }
  return out;
}

std::vector<ContactLawCheck> augmentation_audit(const ConstructionLevel& level,
                                                std::span<const TransformedCopy> augmented) {
  std::vector<ContactLawCheck> out;
  const std::size_t s = level.family.size();
  const auto base = augmented.first(std::min(s, augmented.size()));
  for (std::size_t j = 0; j < level.probes.size() && s + j < augmented.size(); ++j) {
    out.push_back({level.k + 1, ContactLaw::diagonal, j, pierced_by(base, split_probe(level.probes[j]).upper),
                   neighbours_of(augmented, s + j)});
  }
  return out;
}

}  // namespace trifree

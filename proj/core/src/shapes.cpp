#include "trifree/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace trifree {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::size_t> component_labels(std::span<const Seg> segments) {
  DisjointSets sets(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i + 1; j < segments.size(); ++j) {
      if (segs_meet(segments[i], segments[j])) sets.unite(i, j);
    }
  }
  std::vector<std::size_t> labels(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i) labels[i] = sets.find(i);
  return labels;
}

// Whether the union of `shape` covers the closed segment s.
bool covered_by(const Seg& s, std::span<const Seg> shape) {
  if (s.lo == s.hi) {
    return std::any_of(shape.begin(), shape.end(), [&](const Seg& t) { return segs_meet(s, t); });
  }
  std::vector<std::pair<Rat, Rat>> pieces;
  for (const Seg& t : shape) {
    if (t.orientation == s.orientation && t.fixed == s.fixed) pieces.emplace_back(t.lo, t.hi);
  }
  std::sort(pieces.begin(), pieces.end());
  Rat reach = s.lo;
  for (const auto& [lo, hi] : pieces) {
    if (lo > reach) break;
    if (hi > reach) reach = hi;
    if (reach >= s.hi) return true;
  }
  return reach >= s.hi;
}

bool touches_low(const Seg& piece, const Rect& r, bool vertical) {
  if (vertical) return piece.is_horizontal() ? piece.fixed == r.y_lo : piece.lo == r.y_lo;
  return piece.is_horizontal() ? piece.lo == r.x_lo : piece.fixed == r.x_lo;
}

bool touches_high(const Seg& piece, const Rect& r, bool vertical) {
  if (vertical) return piece.is_horizontal() ? piece.fixed == r.y_hi : piece.hi == r.y_hi;
  return piece.is_horizontal() ? piece.hi == r.x_hi : piece.fixed == r.x_hi;
}

bool stabs(std::span<const Seg> segments, const Rect& r, bool vertical) {
  std::vector<Seg> pieces;
  for (const Seg& s : segments) {
    if (auto clipped = clip_seg_to_rect(s, r)) pieces.push_back(std::move(*clipped));
  }
  if (pieces.empty()) return false;
  const auto labels = component_labels(pieces);
  std::vector<char> low(pieces.size(), 0);
  std::vector<char> high(pieces.size(), 0);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (touches_low(pieces[i], r, vertical)) low[labels[i]] = 1;
    if (touches_high(pieces[i], r, vertical)) high[labels[i]] = 1;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (low[i] && high[i]) return true;
  }
  return false;
}

void check_stabber(std::span<const Seg> stabber, std::span<const Seg> shape, const Rect& region,
                   bool vertical, FeatureCondition cond, std::vector<FeatureViolation>& out) {
  if (stabber.empty()) {
    out.push_back({cond, "stabber is empty"});
    return;
  }
  if (!region.is_proper()) {
    out.push_back({cond, "stabber region is degenerate"});
    return;
  }
  for (const Seg& s : stabber) {
    if (!covered_by(s, shape)) out.push_back({cond, "stabber segment not contained in the shape"});
    if (!rect_within(s.bounds(), region)) {
      out.push_back({cond, "stabber segment leaves its region"});
    }
  }
  if (!segments_connected(stabber)) out.push_back({cond, "stabber is not connected"});
  if (!stabs(stabber, region, vertical)) {
    out.push_back({cond, vertical ? "stabber does not connect bottom and top of its region"
                                  : "stabber does not connect left and right of its region"});
  }
}

Rect frame_empty_square(const Rat& eps, const Rat& xi) {
  const Rat right = Rat(1) - eps * xi;
  const Rat half = xi / Rat(2);
  return Rect(right - xi, right, Rat(1, 2) - half, Rat(1, 2) + half);
}

// Shared rules for anchored shapes whose bottom arm is y = 1/4 and whose
// right arm is x = 1 inside the bounding square.
std::shared_ptr<const AnchoredShape> make_anchored(std::shared_ptr<const RectilinearShape> shape,
                                                   std::string rule) {
  AnchoredShape a;
  a.shape = std::move(shape);
  a.rule = std::move(rule);
  a.xi = [](const Rat& eps) { return eps / (Rat(2) * (Rat(1) + eps)); };
  a.empty_square = [xi = a.xi](const Rat& eps) { return frame_empty_square(eps, xi(eps)); };
  a.left_stabber = [xi = a.xi](const Rat& eps) {
    const Rect e = frame_empty_square(eps, xi(eps));
    return std::vector<Seg>{Seg::horizontal(Rat(1, 4), Rat(0), e.x_lo)};
  };
  a.right_stabber = [xi = a.xi](const Rat& eps) {
    const Rect e = frame_empty_square(eps, xi(eps));
    return std::vector<Seg>{Seg::vertical(Rat(1), e.y_lo, e.y_hi)};
  };
  return std::make_shared<const AnchoredShape>(std::move(a));
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  const Rat q(1, 4);
  const Rat tq(3, 4);

  {
    auto frame = std::make_shared<const RectilinearShape>(
        "frame", std::vector<Seg>{Seg::horizontal(0, 0, 1), Seg::vertical(1, 0, 1),
                                  Seg::horizontal(1, 0, 1), Seg::vertical(0, 0, 1)});
    ShapeFeatures f{Rect(0, 1, 0, 1), Rect(q, tq, q, tq),
                    {Seg::horizontal(0, 0, q)}, {Seg::vertical(1, q, tq)}, q, Rat(1)};
    auto anchored_shape = std::make_shared<const RectilinearShape>(
        "frame-anchored", std::vector<Seg>{Seg::horizontal(q, 0, 1), Seg::vertical(1, q, tq),
                                           Seg::horizontal(tq, 0, 1), Seg::vertical(0, q, tq)});
    entries.push_back({frame, std::move(f), make_anchored(anchored_shape, "frame-anchored")});
  }
  {
    auto ell = std::make_shared<const RectilinearShape>(
        "mirrored-l", std::vector<Seg>{Seg::horizontal(0, 0, 1), Seg::vertical(1, 0, 1)});
    ShapeFeatures f{Rect(0, 1, 0, 1), Rect(q, tq, q, tq),
                    {Seg::horizontal(0, 0, q)}, {Seg::vertical(1, q, tq)}, q, Rat(1)};
    auto anchored_shape = std::make_shared<const RectilinearShape>(
        "mirrored-l-anchored", std::vector<Seg>{Seg::horizontal(q, 0, 1), Seg::vertical(1, q, tq)});
    entries.push_back({ell, std::move(f), make_anchored(anchored_shape, "mirrored-l-anchored")});
  }
  {
    const Rat half(1, 2);
    auto cross = std::make_shared<const RectilinearShape>(
        "cross", std::vector<Seg>{Seg::horizontal(half, 0, 1), Seg::vertical(half, 0, 1)});
    ShapeFeatures f{Rect(0, 1, 0, 1), Rect(Rat(1, 8), Rat(3, 8), Rat(5, 8), Rat(7, 8)),
                    {Seg::horizontal(half, 0, Rat(1, 8))}, {Seg::vertical(half, Rat(5, 8), Rat(7, 8))},
                    Rat(1, 8), Rat(1)};
    entries.push_back({cross, std::move(f), nullptr});
  }
  return entries;
}

}  // namespace

bool segments_connected(std::span<const Seg> segments) {
  if (segments.empty()) return false;
  const auto labels = component_labels(segments);
  return std::all_of(labels.begin(), labels.end(), [&](std::size_t l) { return l == labels.front(); });
}

RectilinearShape::RectilinearShape(std::string name, std::vector<Seg> segments)
    : name_(std::move(name)), segments_(std::move(segments)) {
  if (segments_.empty()) throw std::invalid_argument("shape '" + name_ + "' has no segments");
  if (!segments_connected(segments_)) {
    throw std::invalid_argument("shape '" + name_ + "' is not connected");
  }
  bbox_ = bounding_box(segments_);
}

std::string to_string(FeatureCondition c) {
  switch (c) {
    case FeatureCondition::bounding_box: return "bounding box";
    case FeatureCondition::empty_rect: return "empty rectangle";
    case FeatureCondition::left_stabber: return "left stabber";
    case FeatureCondition::right_stabber: return "right stabber";
    case FeatureCondition::widths: return "w1/w2";
  }
  return "?";
}

Rect left_stabber_region(const ShapeFeatures& f) {
  return Rect(f.bbox.x_lo, f.empty_rect.x_lo, f.bbox.y_lo, f.bbox.y_hi);
}

Rect right_stabber_region(const ShapeFeatures& f) {
  return Rect(f.empty_rect.x_hi, f.bbox.x_hi, f.empty_rect.y_lo, f.empty_rect.y_hi);
}

std::vector<FeatureViolation> validate_features(const RectilinearShape& shape,
                                                const ShapeFeatures& f) {
  std::vector<FeatureViolation> out;
  const auto& segs = shape.segments();

  if (f.bbox != shape.bbox()) out.push_back({FeatureCondition::bounding_box, "U differs from the shape's bounding box"});
  if (!f.bbox.is_proper()) out.push_back({FeatureCondition::bounding_box, "U is degenerate"});

  if (!f.empty_rect.is_proper()) out.push_back({FeatureCondition::empty_rect, "E is degenerate"});
  if (!rect_in_interior(f.empty_rect, f.bbox)) {
    out.push_back({FeatureCondition::empty_rect, "E is not in the interior of U"});
  }
  for (const Seg& s : segs) {
    if (seg_meets_rect(s, f.empty_rect)) {
      out.push_back({FeatureCondition::empty_rect, "E meets the shape"});
      break;
    }
  }
  if (!out.empty()) return out;  // stabber regions are meaningless without a valid E

  check_stabber(f.left_stabber, segs, left_stabber_region(f), false, FeatureCondition::left_stabber, out);
  check_stabber(f.right_stabber, segs, right_stabber_region(f), true, FeatureCondition::right_stabber, out);

  if (f.w1 != f.empty_rect.x_lo - f.bbox.x_lo) out.push_back({FeatureCondition::widths, "w1 mismatch"});
  if (f.w2 != f.bbox.width()) out.push_back({FeatureCondition::widths, "w2 mismatch"});
  return out;
}

Rect unit_square() { return Rect(0, 1, 0, 1); }

std::vector<FeatureViolation> validate_anchor(const AnchoredShape& a, const Rat& eps) {
  std::vector<FeatureViolation> out;
  if (eps.sign() <= 0 || eps >= Rat(1)) {
    out.push_back({FeatureCondition::empty_rect, "epsilon outside (0,1)"});
    return out;
  }
  const Rect u = unit_square();
  const auto& segs = a.shape->segments();
  const Rect& box = a.shape->bbox();
  if (!rect_within(box, u) || box.y_lo.sign() <= 0 || box.y_hi >= Rat(1)) {
    out.push_back({FeatureCondition::bounding_box, "shape not inside [0,1]x(0,1)"});
  }

  const Rect e = a.empty_square(eps);
  const Rat xi = a.xi(eps);
  if (!e.is_square() || e.width() != xi) out.push_back({FeatureCondition::empty_rect, "E(eps) is not a square of width xi"});
  if (!rect_within(e, u)) out.push_back({FeatureCondition::empty_rect, "E(eps) leaves U"});
  if (!((Rat(1) + eps) * xi < eps)) out.push_back({FeatureCondition::empty_rect, "(1+eps)xi >= eps"});
  if (u.x_hi - e.x_hi != eps * xi) {
    out.push_back({FeatureCondition::empty_rect, "distance from E(eps) to the right side is not eps*xi"});
  }
  for (const Seg& s : segs) {
    if (seg_meets_rect(s, e)) {
      out.push_back({FeatureCondition::empty_rect, "E(eps) meets the shape"});
      break;
    }
  }
  if (!out.empty()) return out;

  const Rect vl(u.x_lo, e.x_lo, u.y_lo, u.y_hi);
  const Rect vr(e.x_hi, u.x_hi, e.y_lo, e.y_hi);
  check_stabber(a.left_stabber(eps), segs, vl, false, FeatureCondition::left_stabber, out);
  check_stabber(a.right_stabber(eps), segs, vr, true, FeatureCondition::right_stabber, out);
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.shape->name() == name) return e;
  }
  throw std::out_of_range("unknown shape '" + std::string(name) + "'");
}

std::string Lineage::str() const {
  switch (kind) {
    case LineageKind::base: return "base";
    case LineageKind::outer: return "outer";
    case LineageKind::inner: return "inner:" + std::to_string(index);
    case LineageKind::diagonal: return "diagonal:" + std::to_string(index);
    case LineageKind::frame: return "frame:" + std::to_string(index);
  }
  return "?";
}

Lineage Lineage::parse(std::string_view text) {
  if (text == "base") return {LineageKind::base, 0};
  if (text == "outer") return {LineageKind::outer, 0};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("bad lineage '" + std::string(text) + "'");
  const std::string_view head = text.substr(0, colon);
  const std::string tail(text.substr(colon + 1));
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("bad lineage index in '" + std::string(text) + "'");
  }
  const std::size_t index = std::stoull(tail);
  if (head == "inner") return {LineageKind::inner, index};
  if (head == "diagonal") return {LineageKind::diagonal, index};
  if (head == "frame") return {LineageKind::frame, index};
  throw std::invalid_argument("bad lineage '" + std::string(text) + "'");
}

TransformedCopy::TransformedCopy(std::shared_ptr<const RectilinearShape> shape, XYTransform transform,
                                 Lineage lineage)
    : shape_(std::move(shape)), transform_(std::move(transform)), lineage_(lineage) {
  if (!shape_) throw std::invalid_argument("transformed copy without a shape");
  segments_ = apply_all(transform_, shape_->segments());
  bbox_ = transform_.apply(shape_->bbox());
}

TransformedCopy TransformedCopy::moved(const XYTransform& outer, Lineage lineage) const {
  return TransformedCopy(shape_, outer.after(transform_), lineage);
}

TransformedCopy TransformedCopy::relabeled(Lineage lineage) const {
  TransformedCopy c = *this;
  c.lineage_ = lineage;
  return c;
}

bool copies_intersect(const TransformedCopy& a, const TransformedCopy& b) {
  if (!rects_meet(a.bbox(), b.bbox())) return false;
  for (const Seg& s : a.segments()) {
    if (!rects_meet(s.bounds(), b.bbox())) continue;
    for (const Seg& t : b.segments()) {
      if (segs_meet(s, t)) return true;
    }
  }
  return false;
}

bool copies_intersect_within(const TransformedCopy& a, const TransformedCopy& b, const Rect& r) {
  std::vector<Seg> pa;
  std::vector<Seg> pb;
  for (const Seg& s : a.segments()) {
    if (auto c = clip_seg_to_rect(s, r)) pa.push_back(std::move(*c));
  }
  for (const Seg& s : b.segments()) {
    if (auto c = clip_seg_to_rect(s, r)) pb.push_back(std::move(*c));
  }
  for (const Seg& s : pa) {
    for (const Seg& t : pb) {
      if (segs_meet(s, t)) return true;
    }
  }
  return false;
}

bool copy_meets_rect(const TransformedCopy& c, const Rect& r) {
  if (!rects_meet(c.bbox(), r)) return false;
  return std::any_of(c.segments().begin(), c.segments().end(),
                     [&](const Seg& s) { return seg_meets_rect(s, r); });
}

bool stabs_vertically(std::span<const Seg> segments, const Rect& r) { return stabs(segments, r, true); }
bool stabs_horizontally(std::span<const Seg> segments, const Rect& r) { return stabs(segments, r, false); }
bool stabs_vertically(const TransformedCopy& c, const Rect& r) { return stabs(c.segments(), r, true); }
bool stabs_horizontally(const TransformedCopy& c, const Rect& r) { return stabs(c.segments(), r, false); }

Rect family_bbox(std::span<const TransformedCopy> family) {
  if (family.empty()) throw std::invalid_argument("bounding box of an empty family");
  std::vector<Rect> boxes;
  boxes.reserve(family.size());
  for (const auto& c : family) boxes.push_back(c.bbox());
  return bounding_box(boxes);
}

}  // namespace trifree

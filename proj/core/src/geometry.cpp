#include "trifree/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace trifree {

Rect::Rect(Rat x_lo_, Rat x_hi_, Rat y_lo_, Rat y_hi_)
    : x_lo(std::move(x_lo_)), x_hi(std::move(x_hi_)), y_lo(std::move(y_lo_)), y_hi(std::move(y_hi_)) {
  if (x_lo > x_hi || y_lo > y_hi) {
    throw std::invalid_argument("inverted rectangle [" + x_lo.str() + "," + x_hi.str() + "]x[" +
                                y_lo.str() + "," + y_hi.str() + "]");
  }
}

Seg::Seg(Orientation orientation_, Rat fixed_, Rat lo_, Rat hi_)
    : orientation(orientation_), fixed(std::move(fixed_)), lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo > hi) throw std::invalid_argument("segment with lo > hi");
}

Point Seg::start() const {
  return is_horizontal() ? Point{lo, fixed} : Point{fixed, lo};
}

Point Seg::end() const {
  return is_horizontal() ? Point{hi, fixed} : Point{fixed, hi};
}

Rect Seg::bounds() const {
  return is_horizontal() ? Rect(lo, hi, fixed, fixed) : Rect(fixed, fixed, lo, hi);
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << '(' << p.x << ", " << p.y << ')'; }

std::ostream& operator<<(std::ostream& os, const Rect& r) {
  return os << '[' << r.x_lo << ", " << r.x_hi << "] x [" << r.y_lo << ", " << r.y_hi << ']';
}

std::ostream& operator<<(std::ostream& os, const Seg& s) {
  if (s.is_horizontal()) return os << "H y=" << s.fixed << " x=[" << s.lo << ", " << s.hi << ']';
  return os << "V x=" << s.fixed << " y=[" << s.lo << ", " << s.hi << ']';
}

std::optional<SegIntersection> seg_intersect(const Seg& a, const Seg& b) {
  if (a.orientation == b.orientation) {
    if (a.fixed != b.fixed) return std::nullopt;
    const Rat& lo = std::max(a.lo, b.lo);
    const Rat& hi = std::min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Seg(a.orientation, a.fixed, lo, hi);
  }
  const Seg& h = a.is_horizontal() ? a : b;
  const Seg& v = a.is_horizontal() ? b : a;
  if (v.fixed < h.lo || v.fixed > h.hi) return std::nullopt;
  if (h.fixed < v.lo || h.fixed > v.hi) return std::nullopt;
  return Point{v.fixed, h.fixed};
}

bool segs_meet(const Seg& a, const Seg& b) {
  if (a.orientation == b.orientation) {
    return a.fixed == b.fixed && a.lo <= b.hi && b.lo <= a.hi;
  }
  const Seg& h = a.is_horizontal() ? a : b;
  const Seg& v = a.is_horizontal() ? b : a;
  return h.lo <= v.fixed && v.fixed <= h.hi && v.lo <= h.fixed && h.fixed <= v.hi;
}

std::optional<Seg> clip_seg_to_rect(const Seg& s, const Rect& r) {
  const bool h = s.is_horizontal();
  const Rat& fixed_lo = h ? r.y_lo : r.x_lo;
  const Rat& fixed_hi = h ? r.y_hi : r.x_hi;
  if (s.fixed < fixed_lo || s.fixed > fixed_hi) return std::nullopt;
  const Rat& range_lo = h ? r.x_lo : r.y_lo;
  const Rat& range_hi = h ? r.x_hi : r.y_hi;
  const Rat& lo = std::max(s.lo, range_lo);
  const Rat& hi = std::min(s.hi, range_hi);
  if (lo > hi) return std::nullopt;
  return Seg(s.orientation, s.fixed, lo, hi);
}

bool seg_meets_rect(const Seg& s, const Rect& r) {
  if (s.is_horizontal()) {
    return r.y_lo <= s.fixed && s.fixed <= r.y_hi && s.lo <= r.x_hi && r.x_lo <= s.hi;
  }
  return r.x_lo <= s.fixed && s.fixed <= r.x_hi && s.lo <= r.y_hi && r.y_lo <= s.hi;
}

bool rects_meet(const Rect& a, const Rect& b) {
  return a.x_lo <= b.x_hi && b.x_lo <= a.x_hi && a.y_lo <= b.y_hi && b.y_lo <= a.y_hi;
}

bool rect_within(const Rect& inner, const Rect& outer) {
  return outer.x_lo <= inner.x_lo && inner.x_hi <= outer.x_hi && outer.y_lo <= inner.y_lo &&
         inner.y_hi <= outer.y_hi;
}

bool rect_in_interior(const Rect& inner, const Rect& outer) {
  return outer.x_lo < inner.x_lo && inner.x_hi < outer.x_hi && outer.y_lo < inner.y_lo &&
         inner.y_hi < outer.y_hi;
}

RectRelation rect_relations(const Rect& a, const Rect& b) {
  if (!rects_meet(a, b)) return RectRelation::disjoint;
  if (rect_within(b, a)) return RectRelation::a_contains_b;
  if (rect_within(a, b)) return RectRelation::b_contains_a;
  return RectRelation::overlap;
}

Rect bounding_box(std::span<const Seg> segments) {
  if (segments.empty()) throw std::invalid_argument("bounding box of no segments");
  Rect box = segments.front().bounds();
  for (const Seg& s : segments.subspan(1)) {
    const Rect b = s.bounds();
    if (b.x_lo < box.x_lo) box.x_lo = b.x_lo;
    if (b.x_hi > box.x_hi) box.x_hi = b.x_hi;
    if (b.y_lo < box.y_lo) box.y_lo = b.y_lo;
    if (b.y_hi > box.y_hi) box.y_hi = b.y_hi;
  }
  return box;
}

Rect bounding_box(std::span<const Rect> rects) {
  if (rects.empty()) throw std::invalid_argument("bounding box of no rectangles");
  Rect box = rects.front();
  for (const Rect& b : rects.subspan(1)) {
    if (b.x_lo < box.x_lo) box.x_lo = b.x_lo;
    if (b.x_hi > box.x_hi) box.x_hi = b.x_hi;
    if (b.y_lo < box.y_lo) box.y_lo = b.y_lo;
    if (b.y_hi > box.y_hi) box.y_hi = b.y_hi;
  }
  return box;
}

XYTransform::XYTransform(Rat sx, Rat sy, Rat tx, Rat ty)
    : sx_(std::move(sx)), sy_(std::move(sy)), tx_(std::move(tx)), ty_(std::move(ty)) {
  if (sx_.sign() <= 0 || sy_.sign() <= 0) {
    throw std::invalid_argument("transform scale factors must be positive");
  }
}

XYTransform XYTransform::mapping(const Rect& from, const Rect& to) {
  if (!from.is_proper() || !to.is_proper()) {
    throw std::invalid_argument("mapping between degenerate rectangles");
  }
  Rat sx = to.width() / from.width();
  Rat sy = to.height() / from.height();
  Rat tx = to.x_lo - sx * from.x_lo;
  Rat ty = to.y_lo - sy * from.y_lo;
  return XYTransform(std::move(sx), std::move(sy), std::move(tx), std::move(ty));
}

Point XYTransform::apply(const Point& p) const { return {apply_x(p.x), apply_y(p.y)}; }

Seg XYTransform::apply(const Seg& s) const {
  if (s.is_horizontal()) return Seg::horizontal(apply_y(s.fixed), apply_x(s.lo), apply_x(s.hi));
  return Seg::vertical(apply_x(s.fixed), apply_y(s.lo), apply_y(s.hi));
}

Rect XYTransform::apply(const Rect& r) const {
  return Rect(apply_x(r.x_lo), apply_x(r.x_hi), apply_y(r.y_lo), apply_y(r.y_hi));
}

XYTransform XYTransform::after(const XYTransform& inner) const {
  return XYTransform(sx_ * inner.sx_, sy_ * inner.sy_, sx_ * inner.tx_ + tx_, sy_ * inner.ty_ + ty_);
}

XYTransform XYTransform::translated(const Rat& dx, const Rat& dy) const {
  return XYTransform(sx_, sy_, tx_ + dx, ty_ + dy);
}

std::vector<Seg> apply_all(const XYTransform& t, std::span<const Seg> segments) {
  std::vector<Seg> out;
  out.reserve(segments.size());
  for (const Seg& s : segments) out.push_back(t.apply(s));
  return out;
}

}  // namespace trifree

#pragma once

#include "trifree/rational.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace trifree {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi]. Degenerate
/// (zero width or height) rectangles are allowed; inverted ones are not.
struct Rect {
  Rat x_lo;
  Rat x_hi;
  Rat y_lo;
  Rat y_hi;

  Rect() = default;
  /// Throws std::invalid_argument if x_lo > x_hi or y_lo > y_hi.
  Rect(Rat x_lo, Rat x_hi, Rat y_lo, Rat y_hi);

  Rat width() const { return x_hi - x_lo; }
  Rat height() const { return y_hi - y_lo; }
  bool is_proper() const { return x_lo < x_hi && y_lo < y_hi; }
  bool is_square() const { return width() == height(); }
  bool contains(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Orientation { horizontal, vertical };

/// Closed axis-aligned segment. A horizontal segment is y = fixed,
/// x in [lo, hi]; a vertical one is x = fixed, y in [lo, hi]. lo == hi
/// describes a single point.
struct Seg {
  Orientation orientation = Orientation::horizontal;
  Rat fixed;
  Rat lo;
  Rat hi;

  Seg() = default;
  /// Throws std::invalid_argument if lo > hi.
  Seg(Orientation orientation, Rat fixed, Rat lo, Rat hi);

  static Seg horizontal(Rat y, Rat x_lo, Rat x_hi) {
    return Seg(Orientation::horizontal, std::move(y), std::move(x_lo), std::move(x_hi));
  }
  static Seg vertical(Rat x, Rat y_lo, Rat y_hi) {
    return Seg(Orientation::vertical, std::move(x), std::move(y_lo), std::move(y_hi));
  }

  bool is_horizontal() const { return orientation == Orientation::horizontal; }
  Point start() const;
  Point end() const;
  Rect bounds() const;

  friend bool operator==(const Seg&, const Seg&) = default;
};

using SegIntersection = std::variant<Point, Seg>;

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Rect& r);
std::ostream& operator<<(std::ostream& os, const Seg& s);

/// Exact intersection of two closed segments, or nullopt when disjoint.
/// Collinear overlaps come back as a (possibly zero-length) Seg; crossings
/// as a Point.
std::optional<SegIntersection> seg_intersect(const Seg& a, const Seg& b);

/// Allocation-free test equivalent to seg_intersect(a, b).has_value().
bool segs_meet(const Seg& a, const Seg& b);

std::optional<Seg> clip_seg_to_rect(const Seg& s, const Rect& r);
bool seg_meets_rect(const Seg& s, const Rect& r);

enum class RectRelation { disjoint, overlap, a_contains_b, b_contains_a };

/// Closed-set classification. Equal rectangles report a_contains_b.
RectRelation rect_relations(const Rect& a, const Rect& b);

bool rects_meet(const Rect& a, const Rect& b);
bool rect_within(const Rect& inner, const Rect& outer);
/// inner lies in the open interior of outer.
bool rect_in_interior(const Rect& inner, const Rect& outer);

/// Smallest rectangle covering every segment. Throws on empty input.
Rect bounding_box(std::span<const Seg> segments);
Rect bounding_box(std::span<const Rect> rects);

/// x -> sx * x + tx, y -> sy * y + ty with sx, sy > 0.
class XYTransform {
 public:
  XYTransform() : sx_(1), sy_(1), tx_(0), ty_(0) {}
  /// Throws std::invalid_argument unless sx > 0 and sy > 0.
  XYTransform(Rat sx, Rat sy, Rat tx, Rat ty);

  static XYTransform identity() { return {}; }
  static XYTransform homothety(const Rat& scale, Rat tx, Rat ty) {
    return XYTransform(scale, scale, std::move(tx), std::move(ty));
  }
  /// The unique transform taking `from` onto `to`; both must be proper.
  static XYTransform mapping(const Rect& from, const Rect& to);

  const Rat& sx() const { return sx_; }
  const Rat& sy() const { return sy_; }
  const Rat& tx() const { return tx_; }
  const Rat& ty() const { return ty_; }
  bool is_homothety() const { return sx_ == sy_; }

  Rat apply_x(const Rat& x) const { return sx_ * x + tx_; }
  Rat apply_y(const Rat& y) const { return sy_ * y + ty_; }
  Point apply(const Point& p) const;
  Seg apply(const Seg& s) const;
  Rect apply(const Rect& r) const;

  /// (*this) after `inner`: first inner, then this.
  XYTransform after(const XYTransform& inner) const;
  XYTransform translated(const Rat& dx, const Rat& dy) const;

  friend bool operator==(const XYTransform&, const XYTransform&) = default;

 private:
  Rat sx_;
  Rat sy_;
  Rat tx_;
  Rat ty_;
};

std::vector<Seg> apply_all(const XYTransform& t, std::span<const Seg> segments);

}  // namespace trifree

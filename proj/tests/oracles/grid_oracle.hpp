#pragma once

// Lattice-sampling reference for the geometric predicates. Inputs have
// integer coordinates, so a nonempty intersection of closed axis-parallel
// pieces always contains a point of the half-integer lattice, and so does
// a nonempty open interior. Coordinates are doubled to stay in integers.

#include <algorithm>
#include <vector>

namespace oracle {

struct GSeg {
  bool horizontal;
  int fixed;
  int lo;
  int hi;
};

struct GRect {
  int x_lo;
  int x_hi;
  int y_lo;
  int y_hi;
};

struct GPoint {
  int x;  // doubled
  int y;  // doubled
};

inline bool on_seg(const GSeg& s, GPoint p) {
  const int along = s.horizontal ? p.x : p.y;
  const int across = s.horizontal ? p.y : p.x;
  return across == 2 * s.fixed && 2 * s.lo <= along && along <= 2 * s.hi;
}

inline bool in_rect(const GRect& r, GPoint p) {
  return 2 * r.x_lo <= p.x && p.x <= 2 * r.x_hi && 2 * r.y_lo <= p.y && p.y <= 2 * r.y_hi;
}

inline bool in_interior(const GRect& r, GPoint p) {
  return 2 * r.x_lo < p.x && p.x < 2 * r.x_hi && 2 * r.y_lo < p.y && p.y < 2 * r.y_hi;
}

inline std::vector<GPoint> seg_points(const GSeg& s) {
  std::vector<GPoint> out;
  for (int t = 2 * s.lo; t <= 2 * s.hi; ++t) {
    out.push_back(s.horizontal ? GPoint{t, 2 * s.fixed} : GPoint{2 * s.fixed, t});
  }
  return out;
}

inline std::vector<GPoint> rect_points(const GRect& r) {
  std::vector<GPoint> out;
  for (int x = 2 * r.x_lo; x <= 2 * r.x_hi; ++x) {
    for (int y = 2 * r.y_lo; y <= 2 * r.y_hi; ++y) out.push_back({x, y});
  }
  return out;
}

inline bool segs_meet(const GSeg& a, const GSeg& b) {
  const auto pts = seg_points(a);
  return std::any_of(pts.begin(), pts.end(), [&](GPoint p) { return on_seg(b, p); });
}

inline int common_points(const GSeg& a, const GSeg& b) {
  const auto pts = seg_points(a);
  return static_cast<int>(std::count_if(pts.begin(), pts.end(), [&](GPoint p) { return on_seg(b, p); }));
}

inline bool seg_meets_rect(const GSeg& s, const GRect& r) {
  const auto pts = seg_points(s);
  return std::any_of(pts.begin(), pts.end(), [&](GPoint p) { return in_rect(r, p); });
}

inline int seg_points_in_rect(const GSeg& s, const GRect& r) {
  const auto pts = seg_points(s);
  return static_cast<int>(std::count_if(pts.begin(), pts.end(), [&](GPoint p) { return in_rect(r, p); }));
}

inline bool rects_meet(const GRect& a, const GRect& b) {
  const auto pts = rect_points(a);
  return std::any_of(pts.begin(), pts.end(), [&](GPoint p) { return in_rect(b, p); });
}

inline bool rect_within(const GRect& inner, const GRect& outer) {
  const auto pts = rect_points(inner);
  return std::all_of(pts.begin(), pts.end(), [&](GPoint p) { return in_rect(outer, p); });
}

inline bool rect_in_interior(const GRect& inner, const GRect& outer) {
  const auto pts = rect_points(inner);
  return std::all_of(pts.begin(), pts.end(), [&](GPoint p) { return in_interior(outer, p); });
}

inline bool shapes_meet(const std::vector<GSeg>& a, const std::vector<GSeg>& b) {
  for (const auto& s : a) {
    for (const auto& t : b) {
      if (segs_meet(s, t)) return true;
    }
  }
  return false;
}

inline bool shape_meets_rect(const std::vector<GSeg>& a, const GRect& r) {
  return std::any_of(a.begin(), a.end(), [&](const GSeg& s) { return seg_meets_rect(s, r); });
}

}  // namespace oracle

#pragma once

#include "trifree/geometry.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace trifree {

/// True iff the union of the segments is connected (segments adjacent when
/// they share a point).
bool segments_connected(std::span<const Seg> segments);

/// Connected union of closed axis-aligned segments.
class RectilinearShape {
 public:
  /// Throws std::invalid_argument if `segments` is empty or disconnected.
  RectilinearShape(std::string name, std::vector<Seg> segments);

  const std::string& name() const { return name_; }
  const std::vector<Seg>& segments() const { return segments_; }
  const Rect& bbox() const { return bbox_; }

 private:
  std::string name_;
  std::vector<Seg> segments_;
  Rect bbox_;
};

/// Declared bounding box U, empty rectangle E, and the two stabbers of a
/// shape in the independent-scaling construction.
struct ShapeFeatures {
  Rect bbox;
  Rect empty_rect;
  std::vector<Seg> left_stabber;
  std::vector<Seg> right_stabber;
  Rat w1;  ///< distance from the left side of E to the left side of U
  Rat w2;  ///< width of U
};

enum class FeatureCondition {
  bounding_box,   // U is the bounding box of the shape
  empty_rect,     // E in the interior of U, disjoint from the shape
  left_stabber,   // connects left and right sides of the strip left of E
  right_stabber,  // connects bottom and top of the strip right of E
  widths,         // w1, w2 agree with U and E
};

struct FeatureViolation {
  FeatureCondition condition;
  std::string detail;
};

std::string to_string(FeatureCondition c);

/// Exact check of every FeatureCondition; empty result means valid.
std::vector<FeatureViolation> validate_features(const RectilinearShape& shape,
                                                const ShapeFeatures& features);

/// Rectangle to the left of E spanning U's full height.
Rect left_stabber_region(const ShapeFeatures& f);
/// Rectangle to the right of E with E's height, up to U's right side.
Rect right_stabber_region(const ShapeFeatures& f);

/// Shape inside the bounding square [0,1]x(0,1) together with closed-form
/// rules for the epsilon-empty square and the epsilon-stabbers.
struct AnchoredShape {
  std::shared_ptr<const RectilinearShape> shape;
  std::string rule;
  std::function<Rat(const Rat&)> xi;
  std::function<Rect(const Rat&)> empty_square;
  std::function<std::vector<Seg>(const Rat&)> left_stabber;
  std::function<std::vector<Seg>(const Rat&)> right_stabber;
};

/// The square [0,1]x[0,1] in which anchored shapes are normalized.
Rect unit_square();

/// Anchored-shape conditions at one epsilon in (0,1); empty result means valid.
std::vector<FeatureViolation> validate_anchor(const AnchoredShape& anchored, const Rat& epsilon);

struct CatalogEntry {
  std::shared_ptr<const RectilinearShape> shape;
  ShapeFeatures features;
  std::shared_ptr<const AnchoredShape> anchored;  ///< may be null
};

/// Built-in shapes: "frame", "mirrored-l", "cross". The first two carry an
/// anchored representative for the uniform-scaling construction.
const std::vector<CatalogEntry>& catalog();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

enum class LineageKind { base, outer, inner, diagonal, frame };

/// Where a copy came from in the assembly of its family: the base shape,
/// the outer family, the inner family placed in outer probe `index`, the
/// diagonal added for probe `index`, or the frame of strategy node `index`.
struct Lineage {
  LineageKind kind = LineageKind::base;
  std::size_t index = 0;

  std::string str() const;
  /// Inverse of str(); throws std::invalid_argument.
  static Lineage parse(std::string_view text);

  friend bool operator==(const Lineage&, const Lineage&) = default;
};

/// A shape moved by a positive axis-independent scaling plus translation.
/// Segments and bounding box are materialized once at construction.
class TransformedCopy {
 public:
  TransformedCopy(std::shared_ptr<const RectilinearShape> shape, XYTransform transform,
                  Lineage lineage = {});

  const std::shared_ptr<const RectilinearShape>& shape() const { return shape_; }
  const XYTransform& transform() const { return transform_; }
  const Lineage& lineage() const { return lineage_; }
  const std::vector<Seg>& segments() const { return segments_; }
  const Rect& bbox() const { return bbox_; }

  /// Same shape, `outer` applied after the current transform.
  TransformedCopy moved(const XYTransform& outer, Lineage lineage) const;
  TransformedCopy relabeled(Lineage lineage) const;

 private:
  std::shared_ptr<const RectilinearShape> shape_;
  XYTransform transform_;
  Lineage lineage_;
  std::vector<Seg> segments_;
  Rect bbox_;
};

bool copies_intersect(const TransformedCopy& a, const TransformedCopy& b);
/// Some point of a ∩ b lies in r.
bool copies_intersect_within(const TransformedCopy& a, const TransformedCopy& b, const Rect& r);
bool copy_meets_rect(const TransformedCopy& c, const Rect& r);

/// Some connected piece of the segments clipped to r touches both the
/// bottom and top edges of r (vertical) or the left and right edges
/// (horizontal). r must be proper.
bool stabs_vertically(std::span<const Seg> segments, const Rect& r);
bool stabs_horizontally(std::span<const Seg> segments, const Rect& r);
bool stabs_vertically(const TransformedCopy& c, const Rect& r);
bool stabs_horizontally(const TransformedCopy& c, const Rect& r);

/// Bounding box of the union of all copies. Throws on an empty family.
Rect family_bbox(std::span<const TransformedCopy> family);

}  // namespace trifree

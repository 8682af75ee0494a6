#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "amapf/errors.hpp"

namespace amapf {

// World unit = one agent radius. Agents are open unit disks.
using Point2 = Eigen::Vector2d;
using Box2 = Eigen::AlignedBox2d;

inline constexpr double kGeomEps = 1e-9;

inline double cross2(const Point2& a, const Point2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Parameter u in [0,1] of the point on segment [a,b] closest to p.
double closest_param_on_segment(const Point2& p, const Point2& a, const Point2& b);

// Minimum distance from p to the closed segment [a,b]; a == b degenerates to
// point distance.
double dist_point_segment(const Point2& p, const Point2& a, const Point2& b);

// Minimum distance between closed segments [a,b] and [c,d]; 0 if they touch
// or cross.
double dist_segment_segment(const Point2& a, const Point2& b, const Point2& c,
                            const Point2& d);

// All parameters u (ascending) with |a + u(b-a) - center| = r and u in [0,1].
// A tangency yields a single value.
std::vector<double> segment_circle_crossings(const Point2& a, const Point2& b,
                                             const Point2& center, double r);

// Simple polygon, stored counter-clockwise. The constructor normalizes
// orientation and rejects self-intersecting or degenerate input.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  const Box2& bounding_box() const { return bbox_; }

  double area() const;  // positive (CCW)

  // Even-odd containment; points on the boundary are not reliably classified
  // (callers needing boundary semantics combine with boundary_distance).
  bool contains(const Point2& p) const;

  // Distance from p to the boundary polyline.
  double boundary_distance(const Point2& p) const;

  // Distance from p to the polygon as a region: 0 inside, else boundary
  // distance.
  double distance(const Point2& p) const;

  static bool is_simple(const std::vector<Point2>& vertices);

 private:
  std::vector<Point2> verts_;
  Box2 bbox_;
};

// Minimum distance from segment [a,b] to the polygon as a region (0 when the
// segment crosses or lies inside it).
double dist_segment_polygon(const Point2& a, const Point2& b, const Polygon& poly);

// Circumscribed polygonal over-approximation of a shape grown by a disk of
// radius `radius`. The boundary contains the exact inflated region: offset
// edges are tangent to the true offset curve and convex corners are joined by
// tangent chord chains.
struct InflatedRegion {
  enum class Source { polygon, disk };

  Polygon boundary;
  Source source_kind = Source::polygon;
  double radius = 0.0;
  int arc_segments = 0;

  const Box2& bounding_box() const { return boundary.bounding_box(); }

  // True if p lies strictly inside the region, more than `tol` away from the
  // boundary.
  bool interior_contains(const Point2& p, double tol = kGeomEps) const;
};

// Offset a simple polygon outward by r. arc_segments counts tangent chords
// per full turn (>= 8). Throws SelfIntersectingInput for invalid polygons.
InflatedRegion inflate_polygon(const Polygon& poly, double r, int arc_segments);

// Circumscribed regular polygon with arc_segments vertices at circumradius
// r / cos(pi / arc_segments); contains the exact disk.
InflatedRegion disk_region(const Point2& center, double r, int arc_segments);

// True if the open segment (a,b) passes through the interior of the region
// (boundary contact alone does not count).
bool segment_intersects_interior(const Point2& a, const Point2& b,
                                 const InflatedRegion& region,
                                 double tol = kGeomEps);

// Polyline path parameterized by normalized arc length t in [0,1]. A single
// waypoint is a valid zero-length path.
class PolyPath {
 public:
  PolyPath() = default;
  explicit PolyPath(std::vector<Point2> waypoints);

  const std::vector<Point2>& waypoints() const { return pts_; }
  const std::vector<double>& cumulative_lengths() const { return cum_; }
  double length() const { return cum_.back(); }
  bool empty() const { return pts_.empty(); }

  Point2 point_at(double t) const;
  const Point2& front() const { return pts_.front(); }
  const Point2& back() const { return pts_.back(); }

 private:
  std::vector<Point2> pts_;
  std::vector<double> cum_;
};

// Minimum distance from the path to p and the smallest parameter attaining
// it.
std::pair<double, double> path_point_min_dist(const PolyPath& path, const Point2& p);

// Maximal open parameter intervals where dist(path(t), center) < r, merged
// across segment boundaries.
std::vector<std::pair<double, double>> path_blocking_intervals(
    const PolyPath& path, const Point2& center, double r);

// Largest t with dist(path(t), center) = r, or nullopt if the path never
// meets the circle.
std::optional<double> last_circle_crossing(const PolyPath& path,
                                           const Point2& center, double r);

// Path restricted to [t,1], re-normalized; length = (1-t) * original length.
PolyPath subpath_from(const PolyPath& path, double t);

}  // namespace amapf

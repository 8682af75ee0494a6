#include "amapf/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace amapf {

namespace {

constexpr double kParamEps = 1e-12;

// Signed area via the shoelace formula.
double shoelace(const std::vector<Point2>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    s += cross2(a, b);
  }
  return 0.5 * s;
}

// Proper or touching intersection of segments [a,b] and [c,d], excluding
// shared endpoints of adjacent polygon edges (handled by the caller).
bool segments_cross(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
  const Point2 r = b - a;
  const Point2 s = d - c;
  const double denom = cross2(r, s);
  const double qpxr = cross2(c - a, r);
  const double scale = r.norm() * s.norm() + 1e-300;
  if (std::abs(denom) <= kParamEps * scale) {
    if (std::abs(qpxr) > kParamEps * scale) return false;  // parallel, apart
    // Collinear: overlap test on the dominant axis.
    const double rr = r.squaredNorm();
    if (rr <= 0.0) return false;
    double t0 = (c - a).dot(r) / rr;
    double t1 = (d - a).dot(r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    return t0 < 1.0 - kParamEps && t1 > kParamEps;
  }
  const double t = cross2(c - a, s) / denom;
  const double u = qpxr / denom;
  return t > kParamEps && t < 1.0 - kParamEps && u > kParamEps &&
         u < 1.0 - kParamEps;
}

bool point_in_ring(const Point2& p, const std::vector<Point2>& v) {
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const Point2& pi = v[i];
    const Point2& pj = v[j];
    if ((pi.y() > p.y()) != (pj.y() > p.y())) {
      const double xint =
          pi.x() + (p.y() - pi.y()) * (pj.x() - pi.x()) / (pj.y() - pi.y());
      if (p.x() < xint) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

double closest_param_on_segment(const Point2& p, const Point2& a,
                                const Point2& b) {
  const Point2 d = b - a;
  const double dd = d.squaredNorm();
  if (dd <= 0.0) return 0.0;
  return std::clamp((p - a).dot(d) / dd, 0.0, 1.0);
}

double dist_point_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double u = closest_param_on_segment(p, a, b);
  return (p - (a + u * (b - a))).norm();
}

double dist_segment_segment(const Point2& a, const Point2& b, const Point2& c,
                            const Point2& d) {
  const Point2 r = b - a;
  const Point2 s = d - c;
  const double denom = cross2(r, s);
  const double scale = r.norm() * s.norm() + 1e-300;
  if (std::abs(denom) > kParamEps * scale) {
    const double t = cross2(c - a, s) / denom;
    const double u = cross2(c - a, r) / denom;
    if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) return 0.0;
  }
  double best = dist_point_segment(a, c, d);
  best = std::min(best, dist_point_segment(b, c, d));
  best = std::min(best, dist_point_segment(c, a, b));
  best = std::min(best, dist_point_segment(d, a, b));
  return best;
}

std::vector<double> segment_circle_crossings(const Point2& a, const Point2& b,
                                             const Point2& center, double r) {
  std::vector<double> out;
  const Point2 d = b - a;
  const Point2 f = a - center;
  const double qa = d.squaredNorm();
  const double qb = 2.0 * f.dot(d);
  const double qc = f.squaredNorm() - r * r;
  if (qa <= 0.0) return out;  // degenerate segment never "crosses"
  double disc = qb * qb - 4.0 * qa * qc;
  const double disc_scale = qb * qb + std::abs(4.0 * qa * qc) + 1e-300;
  if (disc < 0.0 && disc > -1e-12 * disc_scale) disc = 0.0;
  if (disc < 0.0) return out;
  if (disc == 0.0) {
    const double u = -qb / (2.0 * qa);
    if (u >= -kParamEps && u <= 1.0 + kParamEps)
      out.push_back(std::clamp(u, 0.0, 1.0));
    return out;
  }
  const double sq = std::sqrt(disc);
  const double u1 = (-qb - sq) / (2.0 * qa);
  const double u2 = (-qb + sq) / (2.0 * qa);
  for (double u : {u1, u2}) {
    if (u >= -kParamEps && u <= 1.0 + kParamEps)
      out.push_back(std::clamp(u, 0.0, 1.0));
  }
  return out;
}

Polygon::Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
  if (verts_.size() < 3)
    throw SelfIntersectingInput("polygon requires at least 3 vertices");
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Point2& a = verts_[i];
    const Point2& b = verts_[(i + 1) % verts_.size()];
    if (!a.allFinite())
      throw SelfIntersectingInput("polygon vertex is not finite");
    if ((a - b).norm() <= kGeomEps)
      throw SelfIntersectingInput("consecutive polygon vertices coincide");
  }
  const double sa = shoelace(verts_);
  if (std::abs(sa) <= kGeomEps * kGeomEps)
    throw SelfIntersectingInput("polygon has (near-)zero area");
  if (sa < 0.0) std::reverse(verts_.begin(), verts_.end());
  if (!is_simple(verts_))
    throw SelfIntersectingInput("polygon edges self-intersect");
  bbox_.setEmpty();
  for (const Point2& p : verts_) bbox_.extend(p);
}

double Polygon::area() const { return std::abs(shoelace(verts_)); }

bool Polygon::contains(const Point2& p) const {
  if (!bbox_.contains(p)) return false;
  return point_in_ring(p, verts_);
}

double Polygon::boundary_distance(const Point2& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    best = std::min(
        best, dist_point_segment(p, verts_[i], verts_[(i + 1) % verts_.size()]));
  }
  return best;
}

double Polygon::distance(const Point2& p) const {
  if (contains(p)) return 0.0;
  return boundary_distance(p);
}

bool Polygon::is_simple(const std::vector<Point2>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Adjacent edges share an endpoint; skip them.
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
        return false;
    }
  }
  return true;
}

double dist_segment_polygon(const Point2& a, const Point2& b,
                            const Polygon& poly) {
  if (poly.contains(a) || poly.contains(b)) return 0.0;
  const auto& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best,
                    dist_segment_segment(a, b, v[i], v[(i + 1) % v.size()]));
    if (best == 0.0) return 0.0;
  }
  return best;
}

bool InflatedRegion::interior_contains(const Point2& p, double tol) const {
  Box2 expanded = boundary.bounding_box();
  if (expanded.exteriorDistance(p) > tol) return false;
  if (boundary.boundary_distance(p) <= tol) return false;
  return boundary.contains(p);
}

namespace {

// Chain of tangent-line intersection points covering a circular arc of
// `sweep` radians around `center`, starting at outward angle `start`.
// Chords are tangent to the radius-r circle, so the chain circumscribes the
// arc. Appends the k junction vertices (k = chords needed at the given
// resolution).
void append_arc_chain(std::vector<Point2>& out, const Point2& center, double r,
                      double start, double sweep, int arc_segments) {
  const double step = 2.0 * M_PI / arc_segments;
  const int k = std::max(1, static_cast<int>(std::ceil(sweep / step - 1e-12)));
  const double half = sweep / (2.0 * k);
  const double rr = r / std::cos(half);
  for (int i = 1; i <= k; ++i) {
    const double ang = start + (2.0 * i - 1.0) * half;
    out.push_back(center + rr * Point2(std::cos(ang), std::sin(ang)));
  }
}

}  // namespace

InflatedRegion inflate_polygon(const Polygon& poly, double r,
                               int arc_segments) {
  if (r <= 0.0) throw std::invalid_argument("inflation radius must be > 0");
  if (arc_segments < 8)
    throw std::invalid_argument("arc_segments must be >= 8");
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  std::vector<Point2> out;
  out.reserve(n * 4);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& prev = v[(i + n - 1) % n];
    const Point2& cur = v[i];
    const Point2& next = v[(i + 1) % n];
    const Point2 d_prev = (cur - prev).normalized();
    const Point2 d_next = (next - cur).normalized();
    // CCW polygon: interior lies left of each edge, outward normal is the
    // right normal.
    const Point2 n_prev(d_prev.y(), -d_prev.x());
    const Point2 n_next(d_next.y(), -d_next.x());
    const double turn = cross2(d_prev, d_next);
    if (turn > kParamEps) {
      // Convex corner: tangent chord chain from n_prev to n_next.
      const double a0 = std::atan2(n_prev.y(), n_prev.x());
      double sweep = std::atan2(cross2(n_prev, n_next), n_prev.dot(n_next));
      if (sweep < 0.0) sweep += 2.0 * M_PI;
      append_arc_chain(out, cur, r, a0, sweep, arc_segments);
    } else if (turn < -kParamEps) {
      // Reflex corner: miter join at the offset-line intersection.
      const Point2 p1 = cur + r * n_prev;
      const Point2 p2 = cur + r * n_next;
      const double denom = cross2(d_prev, d_next);
      if (std::abs(denom) > kParamEps) {
        const double s = cross2(p2 - p1, d_next) / denom;
        out.push_back(p1 + s * d_prev);
      } else {
        out.push_back(p1);
      }
    } else {
      // Collinear pass-through.
      out.push_back(cur + r * n_prev);
    }
  }
  InflatedRegion region;
  region.boundary = Polygon(std::move(out));
  region.source_kind = InflatedRegion::Source::polygon;
  region.radius = r;
  region.arc_segments = arc_segments;
  return region;
}

InflatedRegion disk_region(const Point2& center, double r, int arc_segments) {
  if (r <= 0.0) throw std::invalid_argument("disk radius must be > 0");
  if (arc_segments < 3)
    throw std::invalid_argument("arc_segments must be >= 3");
  std::vector<Point2> out;
  out.reserve(arc_segments);
  append_arc_chain(out, center, r, 0.0, 2.0 * M_PI, arc_segments);
  InflatedRegion region;
  region.boundary = Polygon(std::move(out));
  region.source_kind = InflatedRegion::Source::disk;
  region.radius = r;
  region.arc_segments = arc_segments;
  return region;
}

bool segment_intersects_interior(const Point2& a, const Point2& b,
                                 const InflatedRegion& region, double tol) {
  Box2 seg_box;
  seg_box.extend(a);
  seg_box.extend(b);
  Box2 reg_box = region.bounding_box();
  reg_box.min() -= Point2(tol, tol);
  reg_box.max() += Point2(tol, tol);
  if (!seg_box.intersects(reg_box)) return false;

  // Split the segment at every meeting with the boundary, then probe each
  // piece's midpoint for strict interior containment. Handles grazing,
  // collinear overlap, and pass-through-vertex cases uniformly.
  const auto& v = region.boundary.vertices();
  std::vector<double> params = {0.0, 1.0};
  const Point2 r = b - a;
  const double rlen = r.norm();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& c = v[i];
    const Point2& d = v[(i + 1) % v.size()];
    const Point2 s = d - c;
    const double denom = cross2(r, s);
    const double scale = rlen * s.norm() + 1e-300;
    const double qpxr = cross2(c - a, r);
    if (std::abs(denom) <= kParamEps * scale) {
      if (std::abs(qpxr) > kParamEps * scale) continue;
      const double rr = r.squaredNorm();
      if (rr <= 0.0) continue;
      for (const Point2* q : {&c, &d}) {
        const double t = (*q - a).dot(r) / rr;
        if (t > kParamEps && t < 1.0 - kParamEps) params.push_back(t);
      }
      continue;
    }
    const double t = cross2(c - a, s) / denom;
    const double u = qpxr / denom;
    if (t > kParamEps && t < 1.0 - kParamEps && u >= -kParamEps &&
        u <= 1.0 + kParamEps) {
      params.push_back(t);
    }
  }
  std::sort(params.begin(), params.end());
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    if (params[i + 1] - params[i] <= kParamEps) continue;
    const double mid = 0.5 * (params[i] + params[i + 1]);
    if (region.interior_contains(a + mid * r, tol)) return true;
  }
  return false;
}

PolyPath::PolyPath(std::vector<Point2> waypoints) {
  if (waypoints.empty())
    throw std::invalid_argument("path requires at least one waypoint");
  pts_.reserve(waypoints.size());
  for (const Point2& p : waypoints) {
    if (!p.allFinite())
      throw std::invalid_argument("path waypoint is not finite");
    if (!pts_.empty() && (p - pts_.back()).norm() < 1e-12) continue;
    pts_.push_back(p);
  }
  cum_.resize(pts_.size());
  cum_[0] = 0.0;
  for (std::size_t i = 1; i < pts_.size(); ++i)
    cum_[i] = cum_[i - 1] + (pts_[i] - pts_[i - 1]).norm();
}

Point2 PolyPath::point_at(double t) const {
  const double L = length();
  if (L <= 0.0 || pts_.size() == 1) return pts_.front();
  const double s = std::clamp(t, 0.0, 1.0) * L;
  auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cum_.begin());
  if (i == 0) return pts_.front();
  if (i >= pts_.size()) return pts_.back();
  const double seg = cum_[i] - cum_[i - 1];
  const double u = seg > 0.0 ? (s - cum_[i - 1]) / seg : 0.0;
  return pts_[i - 1] + u * (pts_[i] - pts_[i - 1]);
}

std::pair<double, double> path_point_min_dist(const PolyPath& path,
                                              const Point2& p) {
  const auto& pts = path.waypoints();
  const auto& cum = path.cumulative_lengths();
  const double L = path.length();
  if (pts.size() == 1 || L <= 0.0) return {(p - pts.front()).norm(), 0.0};
  double best = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double u = closest_param_on_segment(p, pts[i], pts[i + 1]);
    const Point2 q = pts[i] + u * (pts[i + 1] - pts[i]);
    const double d = (p - q).norm();
    if (d < best) {
      best = d;
      best_t = (cum[i] + u * (cum[i + 1] - cum[i])) / L;
    }
  }
  return {best, best_t};
}

std::vector<std::pair<double, double>> path_blocking_intervals(
    const PolyPath& path, const Point2& center, double r) {
  std::vector<std::pair<double, double>> raw;
  const auto& pts = path.waypoints();
  const auto& cum = path.cumulative_lengths();
  const double L = path.length();
  if (L <= 0.0) {
    if ((pts.front() - center).norm() < r) raw.emplace_back(0.0, 1.0);
    return raw;
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point2 d = pts[i + 1] - pts[i];
    const Point2 f = pts[i] - center;
    const double qa = d.squaredNorm();
    const double qb = 2.0 * f.dot(d);
    const double qc = f.squaredNorm() - r * r;
    if (qa <= 0.0) continue;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0) continue;  // no open interval
    const double sq = std::sqrt(disc);
    double u0 = (-qb - sq) / (2.0 * qa);
    double u1 = (-qb + sq) / (2.0 * qa);
    u0 = std::max(u0, 0.0);
    u1 = std::min(u1, 1.0);
    if (u1 <= u0) continue;
    const double t0 = (cum[i] + u0 * (cum[i + 1] - cum[i])) / L;
    const double t1 = (cum[i] + u1 * (cum[i + 1] - cum[i])) / L;
    raw.emplace_back(t0, t1);
  }
  std::sort(raw.begin(), raw.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& iv : raw) {
    if (!merged.empty() && iv.first <= merged.back().second + kParamEps) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  return merged;
}

std::optional<double> last_circle_crossing(const PolyPath& path,
                                           const Point2& center, double r) {
  const auto& pts = path.waypoints();
  const auto& cum = path.cumulative_lengths();
  const double L = path.length();
  if (L <= 0.0) return std::nullopt;
  std::optional<double> best;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    for (double u : segment_circle_crossings(pts[i], pts[i + 1], center, r)) {
      const double t = (cum[i] + u * (cum[i + 1] - cum[i])) / L;
      if (!best || t > *best) best = t;
    }
  }
  return best;
}

PolyPath subpath_from(const PolyPath& path, double t) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("t must be in [0,1]");
  const auto& pts = path.waypoints();
  const auto& cum = path.cumulative_lengths();
  const double L = path.length();
  if (L <= 0.0) return path;
  const double s = t * L;
  std::vector<Point2> out;
  out.push_back(path.point_at(t));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (cum[i] > s + kParamEps * std::max(1.0, L)) out.push_back(pts[i]);
  }
  return PolyPath(std::move(out));
}

}  // namespace amapf

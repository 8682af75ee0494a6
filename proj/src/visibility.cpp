#include "amapf/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace amapf {

namespace {

bool blocked_by_any(const Point2& a, const Point2& b,
                    const std::vector<InflatedRegion>& regions) {
  for (const auto& region : regions) {
    if (segment_intersects_interior(a, b, region)) return true;
  }
  return false;
}

struct QueueEntry {
  double priority;
  double dist;
  int node;
  bool operator>(const QueueEntry& o) const {
    if (priority != o.priority) return priority > o.priority;
    return node > o.node;
  }
};

using MinQueue =
    std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>;

}  // namespace

int VisibilityGraph::node_index(const Point2& p) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if ((nodes[i] - p).norm() <= 1e-12) return static_cast<int>(i);
  }
  return -1;
}

VisibilityGraph build_visibility_graph(
    const std::vector<InflatedRegion>& regions,
    const std::vector<Point2>& terminals) {
  for (std::size_t t = 0; t < terminals.size(); ++t) {
    for (const auto& region : regions) {
      if (region.interior_contains(terminals[t])) {
        throw TerminalInsideObstacle(
            static_cast<int>(t),
            "terminal " + std::to_string(t) + " lies inside an inflated region");
      }
    }
  }
  VisibilityGraph vg;
  vg.regions = regions;
  for (const auto& region : regions) {
    for (const Point2& p : region.boundary.vertices()) vg.nodes.push_back(p);
  }
  for (const Point2& p : terminals) vg.nodes.push_back(p);
  const std::size_t n = vg.nodes.size();
  vg.adjacency.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = (vg.nodes[i] - vg.nodes[j]).norm();
      if (w <= 1e-12) continue;
      if (blocked_by_any(vg.nodes[i], vg.nodes[j], vg.regions)) continue;
      vg.adjacency[i].emplace_back(static_cast<int>(j), w);
      vg.adjacency[j].emplace_back(static_cast<int>(i), w);
    }
  }
  return vg;
}

std::optional<PolyPath> shortest_path(const VisibilityGraph& vg,
                                      const Point2& from, const Point2& to) {
  const int s = vg.node_index(from);
  const int t = vg.node_index(to);
  if (s < 0 || t < 0)
    throw std::invalid_argument("shortest_path endpoints must be graph nodes");
  if (s == t) return PolyPath({from});
  const std::size_t n = vg.nodes.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  std::vector<bool> done(n, false);
  MinQueue queue;
  dist[s] = 0.0;
  queue.push({0.0, 0.0, s});
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (done[top.node]) continue;
    done[top.node] = true;
    if (top.node == t) break;
    for (const auto& [nb, w] : vg.adjacency[top.node]) {
      const double nd = dist[top.node] + w;
      if (nd < dist[nb]) {
        dist[nb] = nd;
        parent[nb] = top.node;
        queue.push({nd, nd, nb});
      }
    }
  }
  if (!done[t]) return std::nullopt;
  std::vector<Point2> waypoints;
  for (int cur = t; cur != -1; cur = parent[cur])
    waypoints.push_back(vg.nodes[cur]);
  std::reverse(waypoints.begin(), waypoints.end());
  return PolyPath(std::move(waypoints));
}

GeodesicOracle::GeodesicOracle(std::vector<InflatedRegion> regions)
    : regions_(std::move(regions)) {
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    const auto& verts = regions_[r].boundary.vertices();
    const int base = static_cast<int>(verts_.size());
    const int k = static_cast<int>(verts.size());
    for (int i = 0; i < k; ++i) {
      Vertex v;
      v.p = verts[i];
      v.region = static_cast<int>(r);
      v.prev = base + (i + k - 1) % k;
      v.next = base + (i + 1) % k;
      v.buried = false;
      verts_.push_back(v);
    }
  }
  for (auto& v : verts_) {
    for (std::size_t r = 0; r < regions_.size(); ++r) {
      if (static_cast<int>(r) == v.region) continue;
      if (regions_[r].interior_contains(v.p)) {
        v.buried = true;
        break;
      }
    }
  }
  succ_.assign(verts_.size(), std::nullopt);
}

void GeodesicOracle::require_outside(const std::vector<Point2>& terminals) const {
  for (std::size_t t = 0; t < terminals.size(); ++t) {
    for (const auto& region : regions_) {
      if (region.interior_contains(terminals[t])) {
        throw TerminalInsideObstacle(
            static_cast<int>(t),
            "terminal " + std::to_string(t) + " lies inside an inflated region");
      }
    }
  }
}

bool GeodesicOracle::segment_blocked(const Point2& a, const Point2& b) const {
  return blocked_by_any(a, b, regions_);
}

// Tangent candidates: vertices whose two boundary neighbors lie on one side
// of the line from `from`. Taut paths only ever bend at such vertices, so
// the pruning is lossless for shortest-path queries.
void GeodesicOracle::collect_candidates(const Point2& from,
                                        std::vector<int>& out) const {
  out.clear();
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const Vertex& v = verts_[i];
    if (v.buried) continue;
    const Point2 d = v.p - from;
    if (d.norm() <= 1e-12) continue;
    const Point2 e1 = verts_[v.prev].p - v.p;
    const Point2 e2 = verts_[v.next].p - v.p;
    const double s1 = cross2(d, e1);
    const double s2 = cross2(d, e2);
    const double tol = 1e-12 * d.norm() * (e1.norm() + e2.norm());
    if ((s1 > tol && s2 < -tol) || (s1 < -tol && s2 > tol)) continue;
    out.push_back(static_cast<int>(i));
  }
}

const std::vector<std::pair<int, double>>& GeodesicOracle::vertex_successors(
    int vi) const {
  if (!succ_[vi]) {
    std::vector<std::pair<int, double>> list;
    std::vector<int> candidates;
    collect_candidates(verts_[vi].p, candidates);
    for (int c : candidates) {
      if (c == vi) continue;
      const double w = (verts_[vi].p - verts_[c].p).norm();
      if (w <= 1e-12) continue;
      if (segment_blocked(verts_[vi].p, verts_[c].p)) continue;
      list.emplace_back(c, w);
    }
    succ_[vi] = std::move(list);
  }
  return *succ_[vi];
}

std::optional<PolyPath> GeodesicOracle::query(const Point2& from,
                                              const Point2& to) const {
  if ((from - to).norm() <= 1e-12) return PolyPath({from});
  if (!segment_blocked(from, to)) return PolyPath({from, to});

  // A* over tangent candidates; node ids: 0 = source, 1 = target,
  // 2 + k = region vertex k.
  const int nverts = static_cast<int>(verts_.size());
  const int total = nverts + 2;
  std::vector<double> dist(total, std::numeric_limits<double>::infinity());
  std::vector<int> parent(total, -1);
  std::vector<bool> done(total, false);
  auto point_of = [&](int id) -> const Point2& {
    if (id == 0) return from;
    if (id == 1) return to;
    return verts_[id - 2].p;
  };
  MinQueue queue;
  dist[0] = 0.0;
  queue.push({(from - to).norm(), 0.0, 0});
  std::vector<int> candidates;
  while (!queue.empty()) {
    const QueueEntry top = queue.top();
    queue.pop();
    if (done[top.node]) continue;
    done[top.node] = true;
    if (top.node == 1) break;
    const Point2& up = point_of(top.node);
    const double g = dist[top.node];
    auto relax = [&](int id, double w) {
      const double nd = g + w;
      if (nd < dist[id]) {
        dist[id] = nd;
        parent[id] = top.node;
        queue.push({nd + (point_of(id) - to).norm(), nd, id});
      }
    };
    if (top.node == 0) {
      collect_candidates(from, candidates);
      for (int c : candidates) {
        const double w = (verts_[c].p - from).norm();
        if (w <= 1e-12 || segment_blocked(from, verts_[c].p)) continue;
        relax(c + 2, w);
      }
    } else {
      for (const auto& [c, w] : vertex_successors(top.node - 2)) relax(c + 2, w);
    }
    if (!done[1]) {
      const double w = (up - to).norm();
      if (w > 1e-12 && !segment_blocked(up, to)) relax(1, w);
    }
  }
  if (!done[1]) return std::nullopt;
  std::vector<Point2> waypoints;
  for (int cur = 1; cur != -1; cur = parent[cur])
    waypoints.push_back(point_of(cur));
  std::reverse(waypoints.begin(), waypoints.end());
  return PolyPath(std::move(waypoints));
}

}  // namespace amapf

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "amapf/geometry.hpp"

namespace amapf {

// Visibility graph over inflated-region vertices plus query terminals.
// Edges connect node pairs whose open segment avoids every region interior;
// weights are Euclidean distances.
struct VisibilityGraph {
  std::vector<InflatedRegion> regions;
  std::vector<Point2> nodes;  // region vertices first, then terminals
  std::vector<std::vector<std::pair<int, double>>> adjacency;

  int node_index(const Point2& p) const;  // -1 if p is not a node
};

// Builds the full graph. Throws TerminalInsideObstacle if a terminal lies
// strictly inside a region.
VisibilityGraph build_visibility_graph(const std::vector<InflatedRegion>& regions,
                                       const std::vector<Point2>& terminals);

// Min-weight path between two graph nodes (Dijkstra); nullopt when
// unreachable. Throws std::invalid_argument if an endpoint is not a node.
std::optional<PolyPath> shortest_path(const VisibilityGraph& vg,
                                      const Point2& from, const Point2& to);

// Lazy point-to-point geodesic queries over a fixed region set. Produces the
// same lengths as Dijkstra over the full visibility graph, but explores only
// tangent candidate edges on demand and caches per-vertex adjacency, which
// keeps repeated queries against one region set cheap. Not thread-safe.
class GeodesicOracle {
 public:
  explicit GeodesicOracle(std::vector<InflatedRegion> regions);

  const std::vector<InflatedRegion>& regions() const { return regions_; }

  // Throws TerminalInsideObstacle (with the point's index in `terminals`)
  // if any point lies strictly inside a region.
  void require_outside(const std::vector<Point2>& terminals) const;

  // Shortest obstacle-avoiding path; nullopt when unreachable.
  std::optional<PolyPath> query(const Point2& from, const Point2& to) const;

 private:
  struct Vertex {
    Point2 p;
    int region;
    int prev;  // index into verts_ of the boundary predecessor
    int next;
    bool buried;  // strictly inside some other region; never a waypoint
  };

  bool segment_blocked(const Point2& a, const Point2& b) const;
  void collect_candidates(const Point2& from, std::vector<int>& out) const;
  const std::vector<std::pair<int, double>>& vertex_successors(int vi) const;

  std::vector<InflatedRegion> regions_;
  std::vector<Vertex> verts_;
  mutable std::vector<std::optional<std::vector<std::pair<int, double>>>> succ_;
};

}  // namespace amapf

#pragma once

#include <vector>

#include "amapf/geometry.hpp"
#include "amapf/visibility.hpp"

namespace amapf {

// Configuration-space obstacle set for a unit-disk agent: workspace obstacles
// inflated by the agent radius plus a radius-2 disk per delivered goal.
struct CSpaceMap {
  std::vector<InflatedRegion> regions;
  int arc_segments = 64;
};

CSpaceMap build_cspace(const std::vector<Polygon>& obstacles,
                       const std::vector<Point2>& blocked_goals,
                       int arc_segments);

}  // namespace amapf

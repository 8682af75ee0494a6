#pragma once

#include <Eigen/Dense>
#include <vector>

#include "amapf/cspace.hpp"
#include "amapf/geometry.hpp"

namespace amapf {

// entry(i, j) = geodesic length from starts[i] to goals[j]; +infinity when
// the goal is unreachable from that start.
using CostMatrix = Eigen::MatrixXd;

struct Assignment {
  std::vector<int> perm;  // agent index -> goal index, a bijection
  double total_cost = 0.0;
};

// Geodesic cost matrix over the configuration space. Throws
// TerminalInsideObstacle if a start or goal sits inside a region.
CostMatrix build_cost_matrix(const std::vector<Point2>& starts,
                             const std::vector<Point2>& goals,
                             const CSpaceMap& cspace);

// Same computation against an existing oracle (shares its caches).
CostMatrix build_cost_matrix(const std::vector<Point2>& starts,
                             const std::vector<Point2>& goals,
                             const GeodesicOracle& oracle);

// Minimum-total-cost perfect matching. Among equal-cost optima returns the
// lexicographically smallest permutation. Throws InfeasibleAssignment when
// every perfect matching has infinite cost.
Assignment hungarian(const CostMatrix& costs);

}  // namespace amapf

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amapf/assignment.hpp"
#include "amapf/planner.hpp"

namespace amapf {

struct CheckViolation {
  std::string kind;  // "start", "coverage", "obstacle", "agent", "cost",
                     // "cost-bound"
  int move = -1;
  int other = -1;  // obstacle or agent index when applicable
  double distance = 0.0;
  std::string detail;
};

struct CheckReport {
  bool passed = false;
  bool endpoint_coverage = false;
  double min_obstacle_clearance = 0.0;
  double min_interagent_distance = 0.0;
  bool cost_bound_ok = false;
  std::vector<CheckViolation> violations;
};

// Independent plan verification against exact workspace geometry: endpoint
// coverage, clearance >= 1 from the original obstacle polygons, distance
// >= 2 between each moving path and every stationary agent center, and cost
// bookkeeping. Consumes only the instance and the plan.
CheckReport check_solution(const Instance& instance, const PlanResult& plan,
                           double tol = 1e-6);

// sum_of_costs <= initial_assignment_cost + 4m + 1e-6 * m.
bool cost_bound_check(const PlanResult& plan, int m);

// Exhaustive assignment minimum over all permutations (m <= 8); +infinity
// when every permutation uses an infinite entry.
double brute_force_assignment(const CostMatrix& costs);

// Dijkstra over an 8-connected grid of cells whose centers keep `clearance`
// from every obstacle, followed by exact-clearance shortcut smoothing so the
// returned length converges to the true geodesic as cell -> 0. nullopt when
// no grid path exists. The default clearance sits just above the reach of
// the default 64-chord circumscribed inflation so grid paths are always
// feasible for the visibility graph too.
std::optional<double> grid_path_oracle(const std::vector<Polygon>& scene,
                                       const Point2& from, const Point2& to,
                                       double cell, double clearance = 1.0013);

}  // namespace amapf

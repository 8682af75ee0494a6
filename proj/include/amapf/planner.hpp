#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amapf/assignment.hpp"
#include "amapf/cspace.hpp"
#include "amapf/geometry.hpp"

namespace amapf {

inline const double kClassicSeparation = 4.0;
inline const double kRelaxedSeparation = 2.0 * std::sqrt(3.0);
inline const double kObstacleClearance = std::sqrt(5.0);

struct Instance {
  std::vector<Polygon> obstacles;
  std::vector<Point2> starts;
  std::vector<Point2> goals;
  std::optional<Box2> bounds;  // sampling window / viewport; planning is
                               // over the unbounded plane
  // Generator provenance, carried through serialization untouched.
  std::vector<std::pair<std::string, std::string>> metadata;

  int agent_count() const { return static_cast<int>(starts.size()); }
};

enum class PlanMode { classic, modified };

struct PlannerConfig {
  PlanMode mode = PlanMode::modified;
  double separation_threshold = kRelaxedSeparation;
  int arc_segments = 64;
  int refine_retries = 3;
  double eps = 1e-9;

  // classic requires threshold == 4; modified requires >= 2*sqrt(3).
  void validate() const;
};

struct TerminalPairViolation {
  bool a_is_goal;  // false: start
  int a;
  bool b_is_goal;
  int b;
  double distance;
};

struct ObstacleClearanceViolation {
  bool is_goal;
  int terminal;
  int obstacle;
  double distance;
};

struct SeparationReport {
  bool pass = true;
  double threshold = 0.0;
  std::vector<TerminalPairViolation> pair_violations;
  std::vector<ObstacleClearanceViolation> obstacle_violations;

  std::string describe() const;
};

// Flags every pair in S u T closer than `threshold` and every terminal
// closer than sqrt(5) to an obstacle. Violations are data, not errors.
SeparationReport validate_separation(const Instance& instance, double threshold,
                                     double eps = 1e-9);

enum class Branch { direct, six_a, six_b };

std::string branch_name(Branch b);

struct IterationTrace {
  int iteration = 0;
  int chosen_goal = -1;  // original goal index
  int mover = -1;        // original agent index of the committed agent
  Branch branch = Branch::direct;
  std::optional<int> blocker;          // original agent index
  std::optional<double> block_param;   // t
  std::optional<double> reroute_param; // t' (6b only)
  double prefix_length = 0.0;          // reroute prefix (6a/6b)
  double suffix_straightness_dev = 0.0;  // 6b: suffix length minus chord
  int arc_segments_used = 0;
  int refine_count = 0;
};

struct PlanResult {
  std::vector<std::pair<int, PolyPath>> moves;  // (agent, path), commit order
  double sum_of_costs = 0.0;
  double initial_assignment_cost = 0.0;
  std::vector<IterationTrace> traces;
};

// Smallest goal index whose disk stays >= 2 - eps away from every other
// agent's assigned path. Throws StandaloneNotFound if no goal qualifies.
int find_standalone_goal(const std::vector<PolyPath>& paths,
                         const Assignment& assignment,
                         const std::vector<Point2>& goals, double eps = 1e-9);

// The candidate whose blocking interval on `path` has the largest supremum t
// (ties: smaller agent index); nullopt when nobody blocks. Candidates carry
// their own agent indices; the mover must not be among them.
std::optional<std::pair<int, double>> find_last_blocker(
    const PolyPath& path,
    const std::vector<std::pair<int, Point2>>& remaining_starts);

// Reroute of the blocking agent: prefix segment from its start onto the
// blocked path, then the path's remainder. Joins at path(t) when that point
// is at least 2 from the goal (6a), otherwise at the last point at distance
// exactly 2 (6b). Throws RerouteCrossesObstacle if the prefix crosses a
// region.
std::pair<PolyPath, Branch> build_reroute(
    const PolyPath& path, const Point2& goal, const Point2& blocker_start,
    double t, const std::vector<InflatedRegion>& regions, double eps = 1e-9);

// Sequential planning loop: assign, pick a standalone goal, move either its
// agent or the last blocker, accrete the delivered goal as an obstacle,
// repeat until all goals are filled. When planning throws mid-loop and
// partial_traces is non-null, it receives the traces of the iterations that
// committed before the failure.
PlanResult plan(const Instance& instance, const PlannerConfig& config,
                std::vector<IterationTrace>* partial_traces = nullptr);

}  // namespace amapf

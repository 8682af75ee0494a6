#include "amapf/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "amapf/visibility.hpp"

namespace amapf {

void PlannerConfig::validate() const {
  if (arc_segments < 8)
    throw std::invalid_argument("arc_segments must be >= 8");
  if (refine_retries < 0)
    throw std::invalid_argument("refine_retries must be >= 0");
  if (mode == PlanMode::classic) {
    if (separation_threshold != kClassicSeparation)
      throw std::invalid_argument("classic mode requires separation 4");
  } else if (separation_threshold < kRelaxedSeparation - 1e-12) {
    throw std::invalid_argument(
        "modified mode requires separation >= 2*sqrt(3)");
  }
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::direct: return "direct";
    case Branch::six_a: return "6a";
    case Branch::six_b: return "6b";
  }
  return "?";
}

std::string SeparationReport::describe() const {
  std::ostringstream os;
  if (pass) {
    os << "separation ok at threshold " << threshold;
    return os.str();
  }
  for (const auto& v : pair_violations) {
    os << (v.a_is_goal ? "goal " : "start ") << v.a << " and "
       << (v.b_is_goal ? "goal " : "start ") << v.b << " are " << v.distance
       << " apart (< " << threshold << ")\n";
  }
  for (const auto& v : obstacle_violations) {
    os << (v.is_goal ? "goal " : "start ") << v.terminal << " is " << v.distance
       << " from obstacle " << v.obstacle << " (< sqrt(5))\n";
  }
  return os.str();
}

SeparationReport validate_separation(const Instance& instance, double threshold,
                                     double eps) {
  SeparationReport report;
  report.threshold = threshold;
  const int m = instance.agent_count();
  const int total = 2 * m;
  auto terminal = [&](int k) -> const Point2& {
    return k < m ? instance.starts[k] : instance.goals[k - m];
  };
  for (int i = 0; i < total; ++i) {
    for (int j = i + 1; j < total; ++j) {
      const double d = (terminal(i) - terminal(j)).norm();
      if (d < threshold - eps) {
        report.pair_violations.push_back(
            {i >= m, i >= m ? i - m : i, j >= m, j >= m ? j - m : j, d});
      }
    }
  }
  for (int i = 0; i < total; ++i) {
    for (std::size_t o = 0; o < instance.obstacles.size(); ++o) {
      const double d = instance.obstacles[o].distance(terminal(i));
      if (d < kObstacleClearance - eps) {
        report.obstacle_violations.push_back(
            {i >= m, i >= m ? i - m : i, static_cast<int>(o), d});
      }
    }
  }
  report.pass =
      report.pair_violations.empty() && report.obstacle_violations.empty();
  return report;
}

CSpaceMap build_cspace(const std::vector<Polygon>& obstacles,
                       const std::vector<Point2>& blocked_goals,
                       int arc_segments) {
  CSpaceMap map;
  map.arc_segments = arc_segments;
  map.regions.reserve(obstacles.size() + blocked_goals.size());
  for (const Polygon& poly : obstacles)
    map.regions.push_back(inflate_polygon(poly, 1.0, arc_segments));
  for (const Point2& goal : blocked_goals)
    map.regions.push_back(disk_region(goal, 2.0, arc_segments));
  return map;
}

int find_standalone_goal(const std::vector<PolyPath>& paths,
                         const Assignment& assignment,
                         const std::vector<Point2>& goals, double eps) {
  const int k = static_cast<int>(goals.size());
  for (int g = 0; g < k; ++g) {
    bool standalone = true;
    for (int j = 0; j < k && standalone; ++j) {
      if (assignment.perm[j] == g) continue;
      if (path_point_min_dist(paths[j], goals[g]).first < 2.0 - eps)
        standalone = false;
    }
    if (standalone) return g;
  }
  throw StandaloneNotFound("no goal clears every other assigned path");
}

std::optional<std::pair<int, double>> find_last_blocker(
    const PolyPath& path,
    const std::vector<std::pair<int, Point2>>& remaining_starts) {
  std::optional<std::pair<int, double>> best;
  for (const auto& [agent, start] : remaining_starts) {
    const auto intervals = path_blocking_intervals(path, start, 2.0);
    if (intervals.empty()) continue;
    const double sup = intervals.back().second;
    if (!best || sup > best->second ||
        (sup == best->second && agent < best->first)) {
      best = {agent, sup};
    }
  }
  return best;
}

std::pair<PolyPath, Branch> build_reroute(
    const PolyPath& path, const Point2& goal, const Point2& blocker_start,
    double t, const std::vector<InflatedRegion>& regions, double eps) {
  double join_t = t;
  Branch branch = Branch::six_a;
  if ((path.point_at(t) - goal).norm() < 2.0) {
    const auto tprime = last_circle_crossing(path, goal, 2.0);
    if (!tprime)
      throw Error("reroute: path never reaches distance 2 from the goal");
    join_t = *tprime;
    branch = Branch::six_b;
  }
  const Point2 join = path.point_at(join_t);
  for (const auto& region : regions) {
    if (segment_intersects_interior(blocker_start, join, region)) {
      throw RerouteCrossesObstacle(
          "reroute prefix crosses an inflated region");
    }
  }
  PolyPath suffix = subpath_from(path, join_t);
  std::vector<Point2> waypoints;
  waypoints.push_back(blocker_start);
  waypoints.insert(waypoints.end(), suffix.waypoints().begin(),
                   suffix.waypoints().end());
  (void)eps;
  return {PolyPath(std::move(waypoints)), branch};
}

PlanResult plan(const Instance& instance, const PlannerConfig& config,
                std::vector<IterationTrace>* partial_traces) {
  config.validate();
  if (instance.starts.size() != instance.goals.size())
    throw std::invalid_argument("instance needs |starts| == |goals|");
  const int m = instance.agent_count();
  if (m < 1) throw std::invalid_argument("instance needs at least one agent");
  const SeparationReport report =
      validate_separation(instance, config.separation_threshold, config.eps);
  if (!report.pass) throw SeparationViolation(report.describe());

  std::vector<int> active_agents(m), active_goals(m);
  for (int i = 0; i < m; ++i) active_agents[i] = active_goals[i] = i;
  std::vector<Point2> delivered;

  PlanResult result;
  result.moves.reserve(m);

  try {
  for (int iter = 0; iter < m; ++iter) {
    int arc = config.arc_segments;
    int refine = 0;
    for (;;) {
      const CSpaceMap cspace =
          build_cspace(instance.obstacles, delivered, arc);
      GeodesicOracle oracle(cspace.regions);

      const int k = static_cast<int>(active_agents.size());
      std::vector<Point2> starts(k), goals(k);
      for (int i = 0; i < k; ++i) starts[i] = instance.starts[active_agents[i]];
      for (int i = 0; i < k; ++i) goals[i] = instance.goals[active_goals[i]];

      const CostMatrix costs = build_cost_matrix(starts, goals, oracle);
      const Assignment assignment = hungarian(costs);

      std::vector<PolyPath> paths(k);
      for (int j = 0; j < k; ++j) {
        auto path = oracle.query(starts[j], goals[assignment.perm[j]]);
        if (!path) throw Error("assigned pair became unreachable");
        paths[j] = std::move(*path);
      }
      if (iter == 0) result.initial_assignment_cost = assignment.total_cost;

      int goal_local;
      try {
        goal_local = find_standalone_goal(paths, assignment, goals, config.eps);
      } catch (const StandaloneNotFound&) {
        if (refine >= config.refine_retries) {
          throw StandaloneNotFound(
              "no standalone goal at iteration " + std::to_string(iter) +
              " after " + std::to_string(refine) +
              " refinements (arc segments " + std::to_string(arc) + ")");
        }
        ++refine;
        arc *= 2;
        continue;
      }
      int mover_local = -1;
      for (int j = 0; j < k; ++j) {
        if (assignment.perm[j] == goal_local) {
          mover_local = j;
          break;
        }
      }
      const PolyPath& goal_path = paths[mover_local];
      const Point2 goal_point = goals[goal_local];

      std::vector<std::pair<int, Point2>> others;
      others.reserve(k - 1);
      for (int j = 0; j < k; ++j) {
        if (j != mover_local) others.emplace_back(j, starts[j]);
      }
      const auto blocker = find_last_blocker(goal_path, others);

      IterationTrace trace;
      trace.iteration = iter;
      trace.chosen_goal = active_goals[goal_local];
      trace.arc_segments_used = arc;
      trace.refine_count = refine;

      int committed_local;
      PolyPath committed_path;
      if (!blocker) {
        committed_local = mover_local;
        committed_path = goal_path;
        trace.branch = Branch::direct;
      } else {
        const auto [blocker_local, t] = *blocker;
        if (config.mode == PlanMode::classic &&
            (goal_path.point_at(t) - goal_point).norm() < 2.0) {
          throw ClassicAssumptionViolated(
              "classic mode reached a blocking point within 2 of the goal");
        }
        auto [reroute, branch] = build_reroute(
            goal_path, goal_point, starts[blocker_local], t, cspace.regions,
            config.eps);
        committed_local = blocker_local;
        committed_path = std::move(reroute);
        trace.branch = branch;
        trace.blocker = active_agents[blocker_local];
        trace.block_param = t;
        trace.prefix_length =
            (committed_path.waypoints()[1] - committed_path.waypoints()[0])
                .norm();
        if (branch == Branch::six_b) {
          const double tprime =
              *last_circle_crossing(goal_path, goal_point, 2.0);
          trace.reroute_param = tprime;
          const PolyPath tail = subpath_from(goal_path, tprime);
          trace.suffix_straightness_dev =
              tail.length() - (tail.front() - tail.back()).norm();
        }
        if (trace.prefix_length > 2.0 + 1e-6) {
          throw Error("reroute prefix longer than 2; blocking scan is wrong");
        }
      }
      trace.mover = active_agents[committed_local];
      result.traces.push_back(trace);
      result.moves.emplace_back(active_agents[committed_local], committed_path);
      result.sum_of_costs += committed_path.length();

      delivered.push_back(goal_point);
      active_agents.erase(active_agents.begin() + committed_local);
      active_goals.erase(active_goals.begin() + goal_local);
      break;
    }
  }
  } catch (...) {
    if (partial_traces) *partial_traces = result.traces;
    throw;
  }
  return result;
}

}  // namespace amapf

#include "amapf/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

namespace amapf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double path_polygon_clearance(const PolyPath& path, const Polygon& poly) {
  const auto& pts = path.waypoints();
  if (pts.size() == 1) return poly.distance(pts.front());
  double best = kInf;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    best = std::min(best, dist_segment_polygon(pts[i], pts[i + 1], poly));
    if (best == 0.0) break;
  }
  return best;
}

}  // namespace

CheckReport check_solution(const Instance& instance, const PlanResult& plan,
                           double tol) {
  CheckReport report;
  report.min_obstacle_clearance = kInf;
  report.min_interagent_distance = kInf;
  const int m = instance.agent_count();

  if (static_cast<int>(plan.moves.size()) != m) {
    report.violations.push_back(
        {"coverage", -1, -1, 0.0,
         "plan has " + std::to_string(plan.moves.size()) + " moves for " +
             std::to_string(m) + " agents"});
    return report;
  }

  // (a) each agent moves exactly once, from its own start.
  std::vector<int> seen(m, 0);
  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const auto& [agent, path] = plan.moves[k];
    if (agent < 0 || agent >= m) {
      report.violations.push_back({"start", static_cast<int>(k), agent, 0.0,
                                   "move references unknown agent"});
      continue;
    }
    seen[agent]++;
    const double d = (path.front() - instance.starts[agent]).norm();
    if (d > tol) {
      report.violations.push_back(
          {"start", static_cast<int>(k), agent, d,
           "move does not begin at the agent's start"});
    }
  }
  for (int a = 0; a < m; ++a) {
    if (seen[a] != 1) {
      report.violations.push_back(
          {"coverage", -1, a, 0.0,
           "agent moves " + std::to_string(seen[a]) + " times"});
    }
  }

  // Final positions must cover the goal set exactly (goals are pairwise
  // separated, so nearest-match within tol is unambiguous).
  std::vector<bool> goal_taken(m, false);
  bool coverage = true;
  for (const auto& [agent, path] : plan.moves) {
    int match = -1;
    for (int g = 0; g < m; ++g) {
      if (!goal_taken[g] && (path.back() - instance.goals[g]).norm() <= tol) {
        match = g;
        break;
      }
    }
    if (match < 0) {
      coverage = false;
      report.violations.push_back(
          {"coverage", -1, agent, 0.0,
           "final position does not coincide with an unclaimed goal"});
    } else {
      goal_taken[match] = true;
    }
  }
  report.endpoint_coverage = coverage;

  // (b) clearance >= 1 from every original obstacle polygon.
  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const auto& path = plan.moves[k].second;
    for (std::size_t o = 0; o < instance.obstacles.size(); ++o) {
      const double d = path_polygon_clearance(path, instance.obstacles[o]);
      report.min_obstacle_clearance = std::min(report.min_obstacle_clearance, d);
      if (d < 1.0 - tol) {
        report.violations.push_back({"obstacle", static_cast<int>(k),
                                     static_cast<int>(o), d,
                                     "path closer than 1 to an obstacle"});
      }
    }
  }

  // (c) each moving path keeps >= 2 from every stationary center: agents
  // not yet moved wait at their starts, already-moved agents sit at their
  // final positions.
  for (std::size_t k = 0; k < plan.moves.size(); ++k) {
    const auto& path = plan.moves[k].second;
    for (std::size_t j = 0; j < plan.moves.size(); ++j) {
      if (j == k) continue;
      const int other_agent = plan.moves[j].first;
      const Point2 center = j < k ? plan.moves[j].second.back()
                                  : instance.starts[other_agent];
      const double d = path_point_min_dist(path, center).first;
      report.min_interagent_distance =
          std::min(report.min_interagent_distance, d);
      if (d < 2.0 - tol) {
        report.violations.push_back(
            {"agent", static_cast<int>(k), other_agent, d,
             "moving path closer than 2 to a stationary agent"});
      }
    }
  }

  // (d) cost bookkeeping.
  double total = 0.0;
  for (const auto& [agent, path] : plan.moves) total += path.length();
  if (std::abs(total - plan.sum_of_costs) > tol) {
    report.violations.push_back(
        {"cost", -1, -1, std::abs(total - plan.sum_of_costs),
         "sum_of_costs does not match the move lengths"});
  }

  report.cost_bound_ok = cost_bound_check(plan, m);
  if (!report.cost_bound_ok) {
    report.violations.push_back(
        {"cost-bound", -1, -1, plan.sum_of_costs,
         "sum_of_costs exceeds initial assignment cost + 4m"});
  }

  report.passed = report.endpoint_coverage && report.violations.empty();
  return report;
}

bool cost_bound_check(const PlanResult& plan, int m) {
  return plan.sum_of_costs <=
         plan.initial_assignment_cost + 4.0 * m + 1e-6 * m;
}

double brute_force_assignment(const CostMatrix& costs) {
  const int n = static_cast<int>(costs.rows());
  if (n > 8) throw std::invalid_argument("brute force limited to m <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = kInf;
  do {
    double total = 0.0;
    bool finite = true;
    for (int i = 0; i < n && finite; ++i) {
      const double c = costs(i, perm[i]);
      if (!(c < kInf)) finite = false;
      total += c;
    }
    if (finite && total < best) best = total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

struct GridEntry {
  double dist;
  int cell;
  bool operator>(const GridEntry& o) const {
    if (dist != o.dist) return dist > o.dist;
    return cell > o.cell;
  }
};

bool segment_clear(const std::vector<Polygon>& scene, const Point2& a,
                   const Point2& b, double clearance) {
  for (const Polygon& poly : scene) {
    if (dist_segment_polygon(a, b, poly) < clearance) return false;
  }
  return true;
}

}  // namespace

std::optional<double> grid_path_oracle(const std::vector<Polygon>& scene,
                                       const Point2& from, const Point2& to,
                                       double cell, double clearance) {
  if (cell <= 0.0) throw std::invalid_argument("cell size must be > 0");
  Box2 box;
  box.extend(from);
  box.extend(to);
  for (const Polygon& poly : scene) box.extend(poly.bounding_box());
  const double pad = clearance + 2.0 + cell;
  box.min() -= Point2(pad, pad);
  box.max() += Point2(pad, pad);

  // Grid anchored at `from` so the source lies exactly on a node.
  const int ix_min = static_cast<int>(std::floor((box.min().x() - from.x()) / cell));
  const int ix_max = static_cast<int>(std::ceil((box.max().x() - from.x()) / cell));
  const int iy_min = static_cast<int>(std::floor((box.min().y() - from.y()) / cell));
  const int iy_max = static_cast<int>(std::ceil((box.max().y() - from.y()) / cell));
  const int nx = ix_max - ix_min + 1;
  const int ny = iy_max - iy_min + 1;
  auto cell_id = [&](int ix, int iy) { return (iy - iy_min) * nx + (ix - ix_min); };
  auto center = [&](int ix, int iy) {
    return Point2(from.x() + ix * cell, from.y() + iy * cell);
  };

  // Cell centers keep extra slack of half a diagonal step so that every
  // raw grid segment, not just its endpoints, stays at `clearance`.
  const double cell_clearance = clearance + cell * std::sqrt(0.5);
  std::vector<char> free_cell(static_cast<std::size_t>(nx) * ny, 0);
  for (int iy = iy_min; iy <= iy_max; ++iy) {
    for (int ix = ix_min; ix <= ix_max; ++ix) {
      const Point2 p = center(ix, iy);
      bool ok = true;
      for (const Polygon& poly : scene) {
        if (poly.bounding_box().exteriorDistance(p) >= cell_clearance) continue;
        if (poly.distance(p) < cell_clearance) {
          ok = false;
          break;
        }
      }
      free_cell[cell_id(ix, iy)] = ok ? 1 : 0;
    }
  }

  const int sx = 0, sy = 0;
  const int tx = static_cast<int>(std::lround((to.x() - from.x()) / cell));
  const int ty = static_cast<int>(std::lround((to.y() - from.y()) / cell));
  if (!free_cell[cell_id(sx, sy)] || !free_cell[cell_id(tx, ty)])
    return std::nullopt;

  const int n_cells = nx * ny;
  std::vector<double> dist(n_cells, kInf);
  std::vector<int> parent(n_cells, -1);
  std::vector<bool> done(n_cells, false);
  std::priority_queue<GridEntry, std::vector<GridEntry>, std::greater<>> queue;
  const int start_id = cell_id(sx, sy);
  const int target_id = cell_id(tx, ty);
  dist[start_id] = 0.0;
  queue.push({0.0, start_id});
  const int dx8[] = {1, -1, 0, 0, 1, 1, -1, -1};
  const int dy8[] = {0, 0, 1, -1, 1, -1, 1, -1};
  const double diag = cell * std::sqrt(2.0);
  while (!queue.empty()) {
    const GridEntry top = queue.top();
    queue.pop();
    if (done[top.cell]) continue;
    done[top.cell] = true;
    if (top.cell == target_id) break;
    const int iy = top.cell / nx + iy_min;
    const int ix = top.cell % nx + ix_min;
    for (int d = 0; d < 8; ++d) {
      const int jx = ix + dx8[d];
      const int jy = iy + dy8[d];
      if (jx < ix_min || jx > ix_max || jy < iy_min || jy > iy_max) continue;
      const int id = cell_id(jx, jy);
      if (!free_cell[id]) continue;
      const double w = d < 4 ? cell : diag;
      if (dist[top.cell] + w < dist[id]) {
        dist[id] = dist[top.cell] + w;
        parent[id] = top.cell;
        queue.push({dist[id], id});
      }
    }
  }
  if (!done[target_id]) return std::nullopt;

  std::vector<Point2> pts;
  for (int cur = target_id; cur != -1; cur = parent[cur]) {
    const int iy = cur / nx + iy_min;
    const int ix = cur % nx + ix_min;
    pts.push_back(center(ix, iy));
  }
  std::reverse(pts.begin(), pts.end());
  pts.push_back(to);  // snap residue, at most cell/2 in each axis

  // Shortcut smoothing: greedy farthest-visible jumps, one pass from each
  // end. Removes the octile-metric overhead so the estimate tracks the true
  // geodesic.
  auto smooth = [&](const std::vector<Point2>& in) {
    std::vector<Point2> out;
    out.push_back(in.front());
    std::size_t i = 0;
    while (i + 1 < in.size()) {
      std::size_t j = in.size() - 1;
      while (j > i + 1 && !segment_clear(scene, in[i], in[j], clearance)) --j;
      out.push_back(in[j]);
      i = j;
    }
    return out;
  };
  std::vector<Point2> fwd = smooth(pts);
  std::reverse(fwd.begin(), fwd.end());
  std::vector<Point2> rev = smooth(fwd);
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < rev.size(); ++i)
    length += (rev[i + 1] - rev[i]).norm();
  return length;
}

}  // namespace amapf

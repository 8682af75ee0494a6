#include "amapf/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace amapf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Kuhn-Munkres with potentials, O(n^3). Infinite entries are legal; an
// augmentation step whose minimum slack is infinite means no finite perfect
// matching exists.
std::vector<int> solve_min_cost(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!(delta < kInf))
        throw InfeasibleAssignment("no finite-cost perfect matching exists");
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> perm(n, -1);
  for (int j = 1; j <= n; ++j) perm[p[j] - 1] = j - 1;
  return perm;
}

double canonical_total(const Eigen::MatrixXd& a, const std::vector<int>& perm) {
  double total = 0.0;
  for (std::size_t i = 0; i < perm.size(); ++i) total += a(i, perm[i]);
  return total;
}

// Optimal completion for rows [first_free..n) over the goals not in `taken`,
// or empty if infeasible.
std::vector<int> complete(const Eigen::MatrixXd& a, int first_free,
                          const std::vector<bool>& taken) {
  const int n = static_cast<int>(a.rows());
  const int k = n - first_free;
  std::vector<int> free_goals;
  for (int g = 0; g < n; ++g)
    if (!taken[g]) free_goals.push_back(g);
  Eigen::MatrixXd sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = a(first_free + i, free_goals[j]);
  std::vector<int> sub_perm = solve_min_cost(sub);
  std::vector<int> out(k);
  for (int i = 0; i < k; ++i) out[i] = free_goals[sub_perm[i]];
  return out;
}

}  // namespace

CostMatrix build_cost_matrix(const std::vector<Point2>& starts,
                             const std::vector<Point2>& goals,
                             const GeodesicOracle& oracle) {
  std::vector<Point2> terminals = starts;
  terminals.insert(terminals.end(), goals.begin(), goals.end());
  oracle.require_outside(terminals);
  const int m = static_cast<int>(starts.size());
  CostMatrix costs(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto path = oracle.query(starts[i], goals[j]);
      costs(i, j) = path ? path->length() : kInf;
    }
  }
  return costs;
}

CostMatrix build_cost_matrix(const std::vector<Point2>& starts,
                             const std::vector<Point2>& goals,
                             const CSpaceMap& cspace) {
  GeodesicOracle oracle(cspace.regions);
  return build_cost_matrix(starts, goals, oracle);
}

Assignment hungarian(const CostMatrix& costs) {
  if (costs.rows() != costs.cols())
    throw std::invalid_argument("cost matrix must be square");
  const int n = static_cast<int>(costs.rows());
  if (n == 0) return {{}, 0.0};

  std::vector<int> perm = solve_min_cost(costs);
  const double best = canonical_total(costs, perm);

  // Lexicographic refinement: for each agent in turn, adopt the smallest
  // goal that still admits an optimal completion. Totals are compared after
  // canonical front-to-back summation so equal-cost detection is exact.
  std::vector<bool> taken(n, false);
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < perm[i]; ++g) {
      if (taken[g] || !(costs(i, g) < kInf)) continue;
      std::vector<int> candidate = perm;
      candidate[i] = g;
      taken[g] = true;
      bool feasible = true;
      try {
        const std::vector<int> tail = complete(costs, i + 1, taken);
        for (int r = i + 1; r < n; ++r) candidate[r] = tail[r - i - 1];
      } catch (const InfeasibleAssignment&) {
        feasible = false;
      }
      taken[g] = false;
      if (feasible && canonical_total(costs, candidate) == best) {
        perm = candidate;
        break;
      }
    }
    taken[perm[i]] = true;
  }
  return {perm, canonical_total(costs, perm)};
}

}  // namespace amapf

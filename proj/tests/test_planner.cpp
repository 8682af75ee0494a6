#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "amapf/planner.hpp"
#include "amapf/validation.hpp"
#include "test_support.hpp"

using namespace amapf;
using amapf::testing::TestRng;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Two agents, no obstacles, engineered so the planner must take branch 6b:
// the optimal assignment sends agent 0 straight to goal 0 along y = 0, agent
// 1 blocks that path with its last blocking point closer than 2 to the goal,
// and the join point at distance exactly 2 is (2, 0).
Instance six_b_fixture() {
  Instance instance;
  instance.starts = {{7.0, 0.0}, {3.5, 1.0}};
  instance.goals = {{0.0, 0.0}, {3.5 - 3.0 * kSqrt3, 4.0}};
  return instance;
}

}  // namespace

TEST_CASE("validate_separation thresholds") {
  Instance instance;
  instance.starts = {{0, 0}, {2.0 * kSqrt3, 0}};
  instance.goals = {{20, 0}, {40, 0}};
  CHECK(validate_separation(instance, kRelaxedSeparation).pass);
  const auto at4 = validate_separation(instance, 4.0);
  CHECK_FALSE(at4.pass);
  REQUIRE(at4.pair_violations.size() == 1);
  CHECK(at4.pair_violations[0].distance == doctest::Approx(2.0 * kSqrt3));
}

TEST_CASE("validate_separation obstacle clearance at exactly sqrt(5)") {
  Instance instance;
  instance.obstacles = {testing::square_at(10, 0, 1)};
  // goal exactly sqrt(5) from the square's left edge (x = 9)
  instance.starts = {{0, 0}};
  instance.goals = {{9.0 - std::sqrt(5.0), 0}};
  CHECK(validate_separation(instance, kRelaxedSeparation).pass);

  instance.goals = {{9.0 - std::sqrt(5.0) + 0.01, 0}};
  const auto report = validate_separation(instance, kRelaxedSeparation);
  CHECK_FALSE(report.pass);
  REQUIRE(report.obstacle_violations.size() == 1);
}

TEST_CASE("coincident start and goal is a violation") {
  Instance instance;
  instance.starts = {{5, 5}};
  instance.goals = {{5, 5}};
  const auto report = validate_separation(instance, kRelaxedSeparation);
  CHECK_FALSE(report.pass);
  REQUIRE(report.pair_violations.size() == 1);
  CHECK(report.pair_violations[0].distance == 0.0);
}

TEST_CASE("find_standalone_goal") {
  // single agent: its own goal qualifies vacuously
  Assignment one{{0}, 5.0};
  CHECK(find_standalone_goal({PolyPath({{0, 0}, {5, 0}})}, one, {{5, 0}}) == 0);

  // two parallel straight paths far apart: both standalone, smallest index
  Assignment two{{0, 1}, 20.0};
  std::vector<PolyPath> paths = {PolyPath({{0, 0}, {10, 0}}),
                                 PolyPath({{0, 10}, {10, 10}})};
  CHECK(find_standalone_goal(paths, two, {{10, 0}, {10, 10}}) == 0);

  // a path passing within 1.5 of goal 0 excludes it
  std::vector<PolyPath> close = {PolyPath({{0, 0}, {10, 0}}),
                                 PolyPath({{-5, 1.5}, {5, 1.5}})};
  std::vector<Point2> goals = {{10, 0}, {5, 1.5}};
  // goal 0 at (10,0): other path (agent 1) stays 1.5+ away? its end (5,1.5)
  // is 5.2 away, fine -> standalone. Use a goal at the origin instead.
  std::vector<PolyPath> blocking = {PolyPath({{8, 8}, {0, 0}}),
                                    PolyPath({{-5, 1.5}, {5, 1.5}})};
  std::vector<Point2> goals2 = {{0, 0}, {5, 1.5}};
  // path 1 passes through (0, 1.5), i.e. 1.5 < 2 from goal 0
  CHECK(find_standalone_goal(blocking, two, goals2) == 1);
}

TEST_CASE("find_last_blocker") {
  PolyPath path({{0, 0}, {10, 0}});
  auto hit = find_last_blocker(path, {{1, {5, 1}}});
  REQUIRE(hit.has_value());
  CHECK(hit->first == 1);
  CHECK(hit->second == doctest::Approx((5.0 + kSqrt3) / 10.0));

  CHECK_FALSE(find_last_blocker(path, {{1, {5, 7}}, {2, {-4, -4}}}).has_value());

  auto two = find_last_blocker(path, {{1, {3, 1}}, {2, {7, 1}}});
  REQUIRE(two.has_value());
  CHECK(two->first == 2);
  CHECK(two->second == doctest::Approx((7.0 + kSqrt3) / 10.0));
}

TEST_CASE("build_reroute branch 6a") {
  PolyPath path({{10, 0}, {0, 0}});
  const double t = (5.0 + kSqrt3) / 10.0;  // block supremum for start (5,1)
  auto [reroute, branch] = build_reroute(path, {0, 0}, {5, 1}, t, {});
  CHECK(branch == Branch::six_a);
  REQUIRE(reroute.waypoints().size() == 3);
  CHECK(reroute.front() == Point2(5, 1));
  CHECK(reroute.waypoints()[1].x() == doctest::Approx(5.0 - kSqrt3));
  CHECK(reroute.back() == Point2(0, 0));
  const double prefix = (reroute.waypoints()[1] - reroute.front()).norm();
  CHECK(prefix == doctest::Approx(2.0));
  CHECK(reroute.length() <= path.length() + 4.0 + 1e-9);
}

TEST_CASE("build_reroute branch 6b matches the analytic construction") {
  PolyPath path({{10, 0}, {0, 0}});
  const Point2 blocker(3.5, 0.5);
  // blocking interval: |x - 3.5| < sqrt(3.75); last point x = 3.5 - sqrt(3.75)
  const double x_exit = 3.5 - std::sqrt(3.75);
  const double t = (10.0 - x_exit) / 10.0;
  REQUIRE(x_exit < 2.0);  // forces 6b
  auto [reroute, branch] = build_reroute(path, {0, 0}, blocker, t, {});
  CHECK(branch == Branch::six_b);
  REQUIRE(reroute.waypoints().size() == 3);
  CHECK(reroute.front() == blocker);
  CHECK(reroute.waypoints()[1].x() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(reroute.waypoints()[1].y() == doctest::Approx(0.0));
  const double prefix = (reroute.waypoints()[1] - reroute.front()).norm();
  CHECK(prefix == doctest::Approx(std::sqrt(2.5)).epsilon(1e-9));
  CHECK(prefix < 2.0);
  CHECK(reroute.back() == Point2(0, 0));
}

TEST_CASE("build_reroute boundary case goes to 6a") {
  PolyPath path({{10, 0}, {0, 0}});
  // block point exactly at distance 2 from the goal
  const double t = 0.8;
  auto [reroute, branch] = build_reroute(path, {0, 0}, {2, 2}, t, {});
  CHECK(branch == Branch::six_a);
  CHECK(reroute.waypoints()[1] == Point2(2, 0));
}

TEST_CASE("plan m=1 straight move") {
  Instance instance;
  instance.starts = {{0, 0}};
  instance.goals = {{5, 0}};
  PlannerConfig config;
  const PlanResult result = plan(instance, config);
  REQUIRE(result.moves.size() == 1);
  CHECK(result.moves[0].first == 0);
  CHECK(result.sum_of_costs == doctest::Approx(5.0));
  CHECK(result.initial_assignment_cost == doctest::Approx(5.0));
  CHECK(result.traces[0].branch == Branch::direct);
  CHECK(check_solution(instance, result).passed);
}

TEST_CASE("plan takes branch 6b on the constructed two-agent instance") {
  const Instance instance = six_b_fixture();
  REQUIRE(validate_separation(instance, kRelaxedSeparation).pass);
  CHECK_FALSE(validate_separation(instance, 4.0).pass);

  PlannerConfig config;
  const PlanResult result = plan(instance, config);
  REQUIRE(result.moves.size() == 2);

  const IterationTrace& first = result.traces[0];
  CHECK(first.branch == Branch::six_b);
  CHECK(first.chosen_goal == 0);
  CHECK(first.mover == 1);
  REQUIRE(first.blocker.has_value());
  CHECK(*first.blocker == 1);
  CHECK(first.block_param ==
        doctest::Approx((3.5 + kSqrt3) / 7.0).epsilon(1e-12));
  CHECK(first.reroute_param == doctest::Approx(5.0 / 7.0).epsilon(1e-12));

  // join point at (2, 0), prefix sqrt(3.25), straight suffix
  const PolyPath& reroute = result.moves[0].second;
  CHECK(reroute.front() == Point2(3.5, 1.0));
  CHECK(reroute.waypoints()[1].x() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(first.prefix_length == doctest::Approx(std::sqrt(3.25)).epsilon(1e-12));
  CHECK(first.prefix_length < 2.0);
  CHECK(first.suffix_straightness_dev == doctest::Approx(0.0));

  CHECK(result.traces[1].branch == Branch::direct);
  const CheckReport report = check_solution(instance, result);
  CHECK(report.passed);
  CHECK(report.min_interagent_distance >= 2.0 - 1e-9);
}

TEST_CASE("classic mode rejects the 6b fixture by separation") {
  const Instance instance = six_b_fixture();
  PlannerConfig config;
  config.mode = PlanMode::classic;
  config.separation_threshold = kClassicSeparation;
  CHECK_THROWS_AS(plan(instance, config), SeparationViolation);
}

TEST_CASE("planner config invariants") {
  PlannerConfig config;
  config.mode = PlanMode::classic;
  config.separation_threshold = kRelaxedSeparation;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config.mode = PlanMode::modified;
  config.separation_threshold = 3.0;  // below 2*sqrt(3)
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

TEST_CASE("plan rejects mismatched instance") {
  Instance instance;
  instance.starts = {{0, 0}, {10, 10}};
  instance.goals = {{20, 0}};
  CHECK_THROWS_AS(plan(instance, PlannerConfig{}), std::invalid_argument);
}

TEST_CASE("plan is deterministic and respects the cost bound on random instances") {
  TestRng rng(211);
  int done = 0;
  int attempt = 0;
  while (done < 25 && attempt < 400) {
    ++attempt;
    const int m = rng.uniform_int(2, 8);
    // deterministic rejection-sampled instance built inline
    std::vector<Point2> terminals;
    const double side = std::sqrt(4.0 * m * 12.0) + 6.0;
    bool ok = true;
    for (int t = 0; t < 2 * m && ok; ++t) {
      bool placed = false;
      for (int tries = 0; tries < 300; ++tries) {
        const Point2 p = rng.point(0.0, side);
        bool clear = true;
        for (const Point2& q : terminals) {
          if ((p - q).norm() < kRelaxedSeparation + 1e-9) {
            clear = false;
            break;
          }
        }
        if (clear) {
          terminals.push_back(p);
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    Instance instance;
    instance.starts.assign(terminals.begin(), terminals.begin() + m);
    instance.goals.assign(terminals.begin() + m, terminals.end());
    ++done;

    PlannerConfig config;
    const PlanResult a = plan(instance, config);
    const PlanResult b = plan(instance, config);
    CHECK(a.sum_of_costs == b.sum_of_costs);
    REQUIRE(a.moves.size() == b.moves.size());
    for (std::size_t i = 0; i < a.moves.size(); ++i) {
      CHECK(a.moves[i].first == b.moves[i].first);
      CHECK(a.moves[i].second.waypoints() == b.moves[i].second.waypoints());
    }

    CHECK(check_solution(instance, a).passed);
    CHECK(cost_bound_check(a, m));
    CHECK(a.sum_of_costs <= a.initial_assignment_cost + 4.0 * m + 1e-6 * m);

    // per-iteration constraint preservation: committed moves keep >= 2
    // from every static center (already covered by the checker); traces
    // stay within the per-commit detour bound
    for (const IterationTrace& trace : a.traces) {
      if (trace.branch != Branch::direct) CHECK(trace.prefix_length <= 2.0 + 1e-9);
    }
  }
  CHECK(done == 25);
}

TEST_CASE("classic mode never takes 6b on well-separated instances") {
  TestRng rng(307);
  int done = 0;
  while (done < 10) {
    const int m = rng.uniform_int(2, 6);
    std::vector<Point2> terminals;
    const double side = std::sqrt(4.0 * m * 16.0) + 8.0;
    bool ok = true;
    for (int t = 0; t < 2 * m && ok; ++t) {
      bool placed = false;
      for (int tries = 0; tries < 300; ++tries) {
        const Point2 p = rng.point(0.0, side);
        bool clear = true;
        for (const Point2& q : terminals) {
          if ((p - q).norm() < 4.0 + 1e-9) {
            clear = false;
            break;
          }
        }
        if (clear) {
          terminals.push_back(p);
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    Instance instance;
    instance.starts.assign(terminals.begin(), terminals.begin() + m);
    instance.goals.assign(terminals.begin() + m, terminals.end());
    ++done;

    PlannerConfig config;
    config.mode = PlanMode::classic;
    config.separation_threshold = kClassicSeparation;
    const PlanResult result = plan(instance, config);
    for (const IterationTrace& trace : result.traces)
      CHECK(trace.branch != Branch::six_b);
    CHECK(check_solution(instance, result).passed);
  }
}

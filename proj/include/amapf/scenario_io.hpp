#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amapf/planner.hpp"
#include "amapf/validation.hpp"

namespace amapf {

// ---- instance files -------------------------------------------------------
//
//   amapf-instance v1
//   bounds <x0> <y0> <x1> <y1>          (optional)
//   obstacle <k> <x1> <y1> ... <xk> <yk>
//   starts <m>
//   <x> <y>                              (m lines)
//   goals <m>
//   <x> <y>                              (m lines)
//   gen <key> <value>                    (optional metadata)
//
// Numbers use shortest round-trip decimal form; serialize(parse(s)) == s for
// files produced by this library.

Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// FNV-1a over the canonical serialization, as 16 hex digits.
std::string instance_digest(const Instance& instance);

// ---- solution files -------------------------------------------------------

struct SolutionFile {
  std::string digest;
  PlanMode mode = PlanMode::modified;
  double separation_threshold = kRelaxedSeparation;
  int arc_segments = 64;
  int refine_retries = 3;
  double eps = 1e-9;
  std::optional<std::string> seed;  // echoed from instance metadata
  PlanResult plan;
};

SolutionFile make_solution(const Instance& instance, const PlannerConfig& config,
                           const PlanResult& plan);
std::string serialize_solution(const SolutionFile& solution);
SolutionFile parse_solution(const std::string& text);

// ---- instance generation --------------------------------------------------

struct GenerateParams {
  int agents = 1;
  int obstacles = 0;
  Box2 bounds;
  double sep_min = kRelaxedSeparation;
  std::uint64_t seed = 0;
};

// Rejection-sampled instance: convex obstacles (3-8 vertices, pairwise well
// separated), then terminals with pairwise distance >= sep_min across S u T
// and obstacle clearance >= sqrt(5). Deterministic in the seed. Throws
// GenerationExhausted when the bounds are too tight (heuristic: area >=
// 4 * m * sep_min^2).
Instance generate(const GenerateParams& params);

// ---- rendering ------------------------------------------------------------

// Deterministic standalone SVG: obstacles, unit disks at starts and goals,
// move polylines; 6b reroute prefixes carry a distinct class.
std::string render_svg(const Instance& instance, const PlanResult* plan);

// ---- bench ----------------------------------------------------------------

struct BenchRow {
  std::string id;
  int m = 0;
  double min_separation = 0.0;
  std::string classic_outcome;   // rejected | solved | failed
  std::string modified_outcome;  // rejected | solved | failed
  std::optional<double> classic_cost;
  std::optional<double> modified_cost;
  std::optional<double> modified_initial_cost;
  int direct_moves = 0;
  int reroutes_6a = 0;
  int reroutes_6b = 0;
  std::string note;
};

struct BenchSummary {
  int instances = 0;
  int classic_accepted = 0;
  int classic_solved = 0;
  int modified_accepted = 0;
  int modified_solved = 0;
  double mean_cost_gap = 0.0;  // mean(classic - modified) where both solved
  int cost_gap_samples = 0;
  double branch_6b_frequency = 0.0;  // of all modified-plan iterations
};

// Runs both regimes on each instance; never aborts on a single failure.
std::pair<std::vector<BenchRow>, BenchSummary> bench(
    const std::vector<std::pair<std::string, Instance>>& instances);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_summary_text(const BenchSummary& summary);

// Shortest-round-trip decimal formatting used by all file formats.
std::string format_double(double value);

}  // namespace amapf

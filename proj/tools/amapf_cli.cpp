#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "amapf/scenario_io.hpp"

namespace fs = std::filesystem;
using namespace amapf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPlannerFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << bytes;
}

double parse_separation(const std::string& token) {
  if (token == "2sqrt3") return kRelaxedSeparation;
  if (token == "4") return kClassicSeparation;
  double value = 0.0;
  try {
    value = std::stod(token);
  } catch (...) {
    throw std::runtime_error("separation must be '2sqrt3', '4', or a number");
  }
  return value;
}

void dump_traces(const std::vector<IterationTrace>& traces) {
  for (const IterationTrace& t : traces) {
    std::cerr << "iter " << t.iteration << ": goal " << t.chosen_goal
              << " mover " << t.mover << " branch " << branch_name(t.branch);
    if (t.blocker) std::cerr << " blocker " << *t.blocker;
    std::cerr << '\n';
  }
}

int cmd_validate(const std::string& instance_path, const std::string& sep) {
  const Instance instance = parse_instance(read_file(instance_path));
  const double threshold = parse_separation(sep);
  const SeparationReport report = validate_separation(instance, threshold);
  std::cout << report.describe();
  if (!report.pass) {
    std::cout << "validation failed: " << report.pair_violations.size()
              << " separation and " << report.obstacle_violations.size()
              << " clearance violations\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_plan(const std::string& instance_path, const std::string& mode_name,
             int arc_segments, const std::string& out_path,
             const std::string& svg_path) {
  const Instance instance = parse_instance(read_file(instance_path));
  PlannerConfig config;
  if (mode_name == "classic") {
    config.mode = PlanMode::classic;
    config.separation_threshold = kClassicSeparation;
  } else if (mode_name == "modified") {
    config.mode = PlanMode::modified;
    config.separation_threshold = kRelaxedSeparation;
  } else {
    throw std::runtime_error("mode must be 'modified' or 'classic'");
  }
  config.arc_segments = arc_segments;

  PlanResult result;
  std::vector<IterationTrace> partial;
  try {
    result = plan(instance, config, &partial);
  } catch (const SeparationViolation& e) {
    std::cerr << "separation precondition failed:\n" << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "planning failed: " << e.what() << '\n';
    dump_traces(partial);
    return kExitPlannerFailed;
  }

  const SolutionFile solution = make_solution(instance, config, result);
  const std::string bytes = serialize_solution(solution);
  if (out_path.empty())
    std::cout << bytes;
  else
    write_file(out_path, bytes);
  if (!svg_path.empty()) write_file(svg_path, render_svg(instance, &result));
  std::cerr << "planned " << result.moves.size() << " moves, sum_of_costs "
            << format_double(result.sum_of_costs) << '\n';
  return kExitOk;
}

int cmd_check(const std::string& instance_path,
              const std::string& solution_path) {
  const Instance instance = parse_instance(read_file(instance_path));
  const SolutionFile solution = parse_solution(read_file(solution_path));
  if (solution.digest != instance_digest(instance)) {
    std::cerr << "solution digest does not match this instance\n";
    return kExitInputError;
  }
  const CheckReport report = check_solution(instance, solution.plan);
  std::cout << "check " << (report.passed ? "pass" : "fail") << '\n';
  std::cout << "endpoint-coverage "
            << (report.endpoint_coverage ? "ok" : "fail") << '\n';
  std::cout << "min-obstacle-clearance "
            << format_double(report.min_obstacle_clearance) << '\n';
  std::cout << "min-interagent-distance "
            << format_double(report.min_interagent_distance) << '\n';
  std::cout << "cost-bound " << (report.cost_bound_ok ? "ok" : "fail") << '\n';
  for (const CheckViolation& v : report.violations) {
    std::cout << "violation " << v.kind << " move " << v.move << " other "
              << v.other << " distance " << format_double(v.distance) << " : "
              << v.detail << '\n';
  }
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_generate(int agents, int obstacles, double sep_min,
                 std::uint64_t seed, const std::string& bounds_spec,
                 const std::string& out_path) {
  GenerateParams params;
  params.agents = agents;
  params.obstacles = obstacles;
  params.sep_min = sep_min;
  params.seed = seed;
  double x0, y0, x1, y1;
  char c1, c2, c3;
  std::istringstream bs(bounds_spec);
  if (!(bs >> x0 >> c1 >> y0 >> c2 >> x1 >> c3 >> y1) || c1 != ',' ||
      c2 != ',' || c3 != ',') {
    throw std::runtime_error("bounds must be 'x0,y0,x1,y1'");
  }
  params.bounds.min() = Point2(x0, y0);
  params.bounds.max() = Point2(x1, y1);
  const Instance instance = generate(params);
  const std::string bytes = serialize_instance(instance);
  if (out_path.empty())
    std::cout << bytes;
  else
    write_file(out_path, bytes);
  return kExitOk;
}

int cmd_bench(const std::string& in_dir, const std::string& out_csv) {
  std::vector<std::pair<std::string, Instance>> instances;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const fs::path& file : files) {
    try {
      instances.emplace_back(file.stem().string(),
                             parse_instance(read_file(file.string())));
    } catch (const ParseError& e) {
      std::cerr << "skipping " << file << ": " << e.what() << '\n';
    }
  }
  auto [rows, summary] = bench(instances);
  write_file(out_csv, bench_csv(rows));
  std::cout << bench_summary_text(summary);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anonymous multi-agent path planner for unit-disk agents"};
  app.require_subcommand(1);

  std::string instance_path, solution_path, out_path, svg_path;
  std::string separation = "2sqrt3";
  std::string mode = "modified";
  int arc_segments = 64;
  int agents = 1, obstacles = 0;
  double sep_min = kRelaxedSeparation;
  std::uint64_t seed = 0;
  std::string bounds_spec;
  std::string bench_in, bench_out;

  auto* validate_cmd =
      app.add_subcommand("validate", "Check separation and clearance");
  validate_cmd->add_option("instance", instance_path)->required();
  validate_cmd->add_option("--separation", separation,
                           "threshold: 2sqrt3 | 4");

  auto* plan_cmd = app.add_subcommand("plan", "Plan a scenario");
  plan_cmd->add_option("instance", instance_path)->required();
  plan_cmd->add_option("--mode", mode, "modified | classic");
  plan_cmd->add_option("--arc-segments", arc_segments);
  plan_cmd->add_option("--out", out_path, "solution file");
  plan_cmd->add_option("--svg", svg_path, "render to SVG");

  auto* check_cmd = app.add_subcommand("check", "Verify a solution");
  check_cmd->add_option("instance", instance_path)->required();
  check_cmd->add_option("solution", solution_path)->required();

  auto* gen_cmd = app.add_subcommand("generate", "Generate a random instance");
  gen_cmd->add_option("--agents", agents)->required();
  gen_cmd->add_option("--obstacles", obstacles);
  gen_cmd->add_option("--sep-min", sep_min);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--bounds", bounds_spec, "x0,y0,x1,y1")->required();
  gen_cmd->add_option("--out", out_path);

  auto* bench_cmd = app.add_subcommand("bench", "Compare regimes over a directory");
  bench_cmd->add_option("--in", bench_in)->required();
  bench_cmd->add_option("--out", bench_out)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(instance_path, separation);
    if (plan_cmd->parsed())
      return cmd_plan(instance_path, mode, arc_segments, out_path, svg_path);
    if (check_cmd->parsed()) return cmd_check(instance_path, solution_path);
    if (gen_cmd->parsed())
      return cmd_generate(agents, obstacles, sep_min, seed, bounds_spec,
                          out_path);
    if (bench_cmd->parsed()) return cmd_bench(bench_in, bench_out);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const GenerationExhausted& e) {
    std::cerr << "generation failed: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

#include "amapf/scenario_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

namespace amapf {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double_token(const std::string& tok, int line) {
  double value = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a number, got '" + tok + "'");
  return value;
}

long parse_int_token(const std::string& tok, int line) {
  long value = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

struct LineReader {
  std::istringstream stream;
  int number = 0;
  explicit LineReader(const std::string& text) : stream(text) {}
  std::optional<std::pair<int, std::vector<std::string>>> next() {
    std::string line;
    while (std::getline(stream, line)) {
      ++number;
      auto toks = split_ws(line);
      if (!toks.empty()) return {{number, std::move(toks)}};
    }
    return std::nullopt;
  }
};

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  LineReader reader(text);
  auto header = reader.next();
  if (!header || header->second.size() != 2 ||
      header->second[0] != "amapf-instance" || header->second[1] != "v1")
    throw ParseError(header ? header->first : 1,
                     "expected header 'amapf-instance v1'");
  Instance instance;
  std::optional<int> starts_expected, goals_expected;
  enum class Section { top, starts, goals } section = Section::top;
  while (auto entry = reader.next()) {
    const auto& [line, toks] = *entry;
    if (section == Section::starts || section == Section::goals) {
      auto& list = section == Section::starts ? instance.starts : instance.goals;
      const int expected =
          section == Section::starts ? *starts_expected : *goals_expected;
      if (toks.size() != 2)
        throw ParseError(line, "expected '<x> <y>'");
      list.emplace_back(parse_double_token(toks[0], line),
                        parse_double_token(toks[1], line));
      if (static_cast<int>(list.size()) == expected) section = Section::top;
      continue;
    }
    const std::string& key = toks[0];
    if (key == "bounds") {
      if (toks.size() != 5) throw ParseError(line, "bounds needs 4 numbers");
      Box2 box;
      box.min() = Point2(parse_double_token(toks[1], line),
                         parse_double_token(toks[2], line));
      box.max() = Point2(parse_double_token(toks[3], line),
                         parse_double_token(toks[4], line));
      if (box.isEmpty()) throw ParseError(line, "bounds are empty");
      instance.bounds = box;
    } else if (key == "obstacle") {
      if (toks.size() < 2) throw ParseError(line, "obstacle needs a vertex count");
      const long k = parse_int_token(toks[1], line);
      if (k < 3) throw ParseError(line, "obstacle needs at least 3 vertices");
      if (static_cast<long>(toks.size()) != 2 + 2 * k)
        throw ParseError(line, "obstacle vertex count mismatch");
      std::vector<Point2> verts;
      for (long i = 0; i < k; ++i) {
        verts.emplace_back(parse_double_token(toks[2 + 2 * i], line),
                           parse_double_token(toks[3 + 2 * i], line));
      }
      try {
        instance.obstacles.emplace_back(std::move(verts));
      } catch (const SelfIntersectingInput& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "starts" || key == "goals") {
      if (toks.size() != 2) throw ParseError(line, key + " needs a count");
      const long count = parse_int_token(toks[1], line);
      if (count < 1) throw ParseError(line, key + " count must be >= 1");
      if (key == "starts") {
        starts_expected = static_cast<int>(count);
        section = Section::starts;
      } else {
        goals_expected = static_cast<int>(count);
        section = Section::goals;
      }
    } else if (key == "gen") {
      if (toks.size() < 3) throw ParseError(line, "gen needs '<key> <value>'");
      std::string value = toks[2];
      for (std::size_t i = 3; i < toks.size(); ++i) value += " " + toks[i];
      instance.metadata.emplace_back(toks[1], value);
    } else {
      throw ParseError(line, "unknown directive '" + key + "'");
    }
  }
  if (!starts_expected || !goals_expected)
    throw ParseError(reader.number, "missing starts/goals sections");
  if (static_cast<int>(instance.starts.size()) != *starts_expected ||
      static_cast<int>(instance.goals.size()) != *goals_expected)
    throw ParseError(reader.number, "truncated starts/goals list");
  if (instance.starts.size() != instance.goals.size())
    throw ParseError(reader.number, "|starts| must equal |goals|");
  return instance;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream os;
  os << "amapf-instance v1\n";
  if (instance.bounds) {
    os << "bounds " << format_double(instance.bounds->min().x()) << ' '
       << format_double(instance.bounds->min().y()) << ' '
       << format_double(instance.bounds->max().x()) << ' '
       << format_double(instance.bounds->max().y()) << '\n';
  }
  for (const Polygon& poly : instance.obstacles) {
    os << "obstacle " << poly.size();
    for (const Point2& p : poly.vertices())
      os << ' ' << format_double(p.x()) << ' ' << format_double(p.y());
    os << '\n';
  }
  os << "starts " << instance.starts.size() << '\n';
  for (const Point2& p : instance.starts)
    os << format_double(p.x()) << ' ' << format_double(p.y()) << '\n';
  os << "goals " << instance.goals.size() << '\n';
  for (const Point2& p : instance.goals)
    os << format_double(p.x()) << ' ' << format_double(p.y()) << '\n';
  for (const auto& [key, value] : instance.metadata)
    os << "gen " << key << ' ' << value << '\n';
  return os.str();
}

std::string instance_digest(const Instance& instance) {
  return hex64(fnv1a(serialize_instance(instance)));
}

SolutionFile make_solution(const Instance& instance, const PlannerConfig& config,
                           const PlanResult& plan) {
  SolutionFile out;
  out.digest = instance_digest(instance);
  out.mode = config.mode;
  out.separation_threshold = config.separation_threshold;
  out.arc_segments = config.arc_segments;
  out.refine_retries = config.refine_retries;
  out.eps = config.eps;
  for (const auto& [key, value] : instance.metadata) {
    if (key == "seed") out.seed = value;
  }
  out.plan = plan;
  return out;
}

namespace {

std::string opt_num(const std::optional<double>& v) {
  return v ? format_double(*v) : "-";
}
std::string opt_num(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "-";
}

}  // namespace

std::string serialize_solution(const SolutionFile& s) {
  std::ostringstream os;
  os << "amapf-solution v1\n";
  os << "instance-digest " << s.digest << '\n';
  os << "mode " << (s.mode == PlanMode::classic ? "classic" : "modified")
     << '\n';
  os << "separation-threshold " << format_double(s.separation_threshold)
     << '\n';
  os << "arc-segments " << s.arc_segments << '\n';
  os << "refine-retries " << s.refine_retries << '\n';
  os << "eps " << format_double(s.eps) << '\n';
  if (s.seed) os << "seed " << *s.seed << '\n';
  os << "initial-assignment-cost "
     << format_double(s.plan.initial_assignment_cost) << '\n';
  os << "sum-of-costs " << format_double(s.plan.sum_of_costs) << '\n';
  os << "moves " << s.plan.moves.size() << '\n';
  for (const auto& [agent, path] : s.plan.moves) {
    os << "move " << agent << ' ' << path.waypoints().size() << ' '
       << format_double(path.length());
    for (const Point2& p : path.waypoints())
      os << ' ' << format_double(p.x()) << ' ' << format_double(p.y());
    os << '\n';
  }
  for (const IterationTrace& t : s.plan.traces) {
    os << "trace " << t.iteration << ' ' << t.chosen_goal << ' ' << t.mover
       << ' ' << branch_name(t.branch) << ' ' << opt_num(t.blocker) << ' '
       << opt_num(t.block_param) << ' ' << opt_num(t.reroute_param) << ' '
       << format_double(t.prefix_length) << ' ' << t.arc_segments_used << ' '
       << t.refine_count << '\n';
  }
  return os.str();
}

SolutionFile parse_solution(const std::string& text) {
  LineReader reader(text);
  auto header = reader.next();
  if (!header || header->second.size() != 2 ||
      header->second[0] != "amapf-solution" || header->second[1] != "v1")
    throw ParseError(header ? header->first : 1,
                     "expected header 'amapf-solution v1'");
  SolutionFile s;
  int moves_expected = -1;
  while (auto entry = reader.next()) {
    const auto& [line, toks] = *entry;
    const std::string& key = toks[0];
    auto need = [&](std::size_t count) {
      if (toks.size() != count)
        throw ParseError(line, "'" + key + "' has the wrong field count");
    };
    if (key == "instance-digest") {
      need(2);
      s.digest = toks[1];
    } else if (key == "mode") {
      need(2);
      if (toks[1] == "classic")
        s.mode = PlanMode::classic;
      else if (toks[1] == "modified")
        s.mode = PlanMode::modified;
      else
        throw ParseError(line, "unknown mode '" + toks[1] + "'");
    } else if (key == "separation-threshold") {
      need(2);
      s.separation_threshold = parse_double_token(toks[1], line);
    } else if (key == "arc-segments") {
      need(2);
      s.arc_segments = static_cast<int>(parse_int_token(toks[1], line));
    } else if (key == "refine-retries") {
      need(2);
      s.refine_retries = static_cast<int>(parse_int_token(toks[1], line));
    } else if (key == "eps") {
      need(2);
      s.eps = parse_double_token(toks[1], line);
    } else if (key == "seed") {
      need(2);
      s.seed = toks[1];
    } else if (key == "initial-assignment-cost") {
      need(2);
      s.plan.initial_assignment_cost = parse_double_token(toks[1], line);
    } else if (key == "sum-of-costs") {
      need(2);
      s.plan.sum_of_costs = parse_double_token(toks[1], line);
    } else if (key == "moves") {
      need(2);
      moves_expected = static_cast<int>(parse_int_token(toks[1], line));
    } else if (key == "move") {
      if (toks.size() < 4) throw ParseError(line, "move is truncated");
      const int agent = static_cast<int>(parse_int_token(toks[1], line));
      const long count = parse_int_token(toks[2], line);
      if (count < 1) throw ParseError(line, "move needs >= 1 waypoint");
      if (static_cast<long>(toks.size()) != 4 + 2 * count)
        throw ParseError(line, "move waypoint count mismatch");
      std::vector<Point2> pts;
      for (long i = 0; i < count; ++i) {
        pts.emplace_back(parse_double_token(toks[4 + 2 * i], line),
                         parse_double_token(toks[5 + 2 * i], line));
      }
      s.plan.moves.emplace_back(agent, PolyPath(std::move(pts)));
    } else if (key == "trace") {
      need(11);
      IterationTrace t;
      t.iteration = static_cast<int>(parse_int_token(toks[1], line));
      t.chosen_goal = static_cast<int>(parse_int_token(toks[2], line));
      t.mover = static_cast<int>(parse_int_token(toks[3], line));
      if (toks[4] == "direct")
        t.branch = Branch::direct;
      else if (toks[4] == "6a")
        t.branch = Branch::six_a;
      else if (toks[4] == "6b")
        t.branch = Branch::six_b;
      else
        throw ParseError(line, "unknown branch '" + toks[4] + "'");
      if (toks[5] != "-")
        t.blocker = static_cast<int>(parse_int_token(toks[5], line));
      if (toks[6] != "-") t.block_param = parse_double_token(toks[6], line);
      if (toks[7] != "-") t.reroute_param = parse_double_token(toks[7], line);
      t.prefix_length = parse_double_token(toks[8], line);
      t.arc_segments_used = static_cast<int>(parse_int_token(toks[9], line));
      t.refine_count = static_cast<int>(parse_int_token(toks[10], line));
      s.plan.traces.push_back(t);
    } else {
      throw ParseError(line, "unknown directive '" + key + "'");
    }
  }
  if (moves_expected >= 0 &&
      moves_expected != static_cast<int>(s.plan.moves.size()))
    throw ParseError(reader.number, "move count mismatch");
  return s;
}

// ---- generation ------------------------------------------------------------

namespace {

// All randomness flows through one fixed-width generator so instances are
// reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = (eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Point2& a, const Point2& b) {
                          return (a - b).norm() < 1e-12;
                        }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return {};
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 &&
           cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12)
      --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower &&
           cross2(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 1e-12)
      --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_gap(const Polygon& a, const Polygon& b) {
  const auto& va = a.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < va.size(); ++i) {
    best = std::min(best, dist_segment_polygon(va[i], va[(i + 1) % va.size()], b));
    if (best == 0.0) break;
  }
  return best;
}

}  // namespace

Instance generate(const GenerateParams& params) {
  if (params.agents < 1)
    throw std::invalid_argument("generator needs at least one agent");
  if (params.sep_min < kRelaxedSeparation - 1e-9)
    throw std::invalid_argument("sep_min must be >= 2*sqrt(3)");
  if (params.bounds.isEmpty())
    throw std::invalid_argument("generator needs non-empty bounds");
  const double area = params.bounds.sizes().prod();
  if (area < 4.0 * params.agents * params.sep_min * params.sep_min) {
    throw GenerationExhausted(
        "bounds too small: need area >= 4 * m * sep_min^2 = " +
        format_double(4.0 * params.agents * params.sep_min * params.sep_min));
  }

  Rng rng(params.seed);
  Instance instance;
  instance.bounds = params.bounds;
  const Point2 lo = params.bounds.min();
  const Point2 hi = params.bounds.max();

  // Obstacles keep a mutual gap of 2.5 so their unit inflations never merge
  // and the free space stays connected.
  const double kObstacleGap = 2.5;
  for (int o = 0; o < params.obstacles; ++o) {
    bool placed = false;
    for (int attempt = 0; attempt < 400 && !placed; ++attempt) {
      const double radius = rng.uniform(0.8, 2.2);
      if (hi.x() - lo.x() < 2 * radius || hi.y() - lo.y() < 2 * radius) break;
      const Point2 center(rng.uniform(lo.x() + radius, hi.x() - radius),
                          rng.uniform(lo.y() + radius, hi.y() - radius));
      std::vector<Point2> cloud;
      for (int i = 0; i < 8; ++i) {
        const double ang = rng.uniform(0.0, 2.0 * M_PI);
        const double rad = radius * std::sqrt(rng.uniform(0.15, 1.0));
        cloud.push_back(center + rad * Point2(std::cos(ang), std::sin(ang)));
      }
      auto hull = convex_hull(std::move(cloud));
      if (hull.size() < 3 || hull.size() > 8) continue;
      Polygon candidate;
      try {
        candidate = Polygon(std::move(hull));
      } catch (const SelfIntersectingInput&) {
        continue;
      }
      bool clear = true;
      for (const Polygon& existing : instance.obstacles) {
        if (polygon_gap(candidate, existing) < kObstacleGap) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      instance.obstacles.push_back(std::move(candidate));
      placed = true;
    }
    if (!placed)
      throw GenerationExhausted(
          "could not place obstacle " + std::to_string(o) +
          "; bounds too crowded");
  }

  const double clearance = kObstacleClearance + 1e-9;
  std::vector<Point2> terminals;
  for (int t = 0; t < 2 * params.agents; ++t) {
    bool placed = false;
    for (int attempt = 0; attempt < 4000 && !placed; ++attempt) {
      const Point2 p(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()));
      bool ok = true;
      for (const Point2& q : terminals) {
        if ((p - q).norm() < params.sep_min + 1e-9) {
          ok = false;
          break;
        }
      }
      if (ok) {
        for (const Polygon& poly : instance.obstacles) {
          if (poly.distance(p) < clearance) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      terminals.push_back(p);
      placed = true;
    }
    if (!placed)
      throw GenerationExhausted(
          "could not place terminal " + std::to_string(t) +
          " at separation " + format_double(params.sep_min) +
          "; enlarge the bounds (heuristic: area >= 4 * m * sep_min^2)");
  }
  instance.starts.assign(terminals.begin(), terminals.begin() + params.agents);
  instance.goals.assign(terminals.begin() + params.agents, terminals.end());

  instance.metadata.emplace_back("seed", std::to_string(params.seed));
  instance.metadata.emplace_back("agents", std::to_string(params.agents));
  instance.metadata.emplace_back("obstacles",
                                 std::to_string(params.obstacles));
  instance.metadata.emplace_back("sep_min", format_double(params.sep_min));
  return instance;
}

// ---- rendering -------------------------------------------------------------

namespace {

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Instance& instance, const PlanResult* plan) {
  Box2 view;
  if (instance.bounds) {
    view = *instance.bounds;
  } else {
    view.setEmpty();
    for (const Point2& p : instance.starts) view.extend(p);
    for (const Point2& p : instance.goals) view.extend(p);
    for (const Polygon& poly : instance.obstacles)
      view.extend(poly.bounding_box());
  }
  view.min() -= Point2(3.0, 3.0);
  view.max() += Point2(3.0, 3.0);
  const double w = view.sizes().x();
  const double h = view.sizes().y();

  std::ostringstream os;
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << svg_num(24 * w)
     << "' height='" << svg_num(24 * h) << "' viewBox='" << svg_num(view.min().x())
     << ' ' << svg_num(-view.max().y()) << ' ' << svg_num(w) << ' ' << svg_num(h)
     << "'>\n";
  os << "<g transform='scale(1,-1)' stroke-linejoin='round'>\n";
  for (const Polygon& poly : instance.obstacles) {
    os << "<polygon class='obstacle' fill='#555' stroke='none' points='";
    bool first = true;
    for (const Point2& p : poly.vertices()) {
      if (!first) os << ' ';
      os << svg_num(p.x()) << ',' << svg_num(p.y());
      first = false;
    }
    os << "'/>\n";
  }
  for (const Point2& p : instance.starts) {
    os << "<circle class='start' cx='" << svg_num(p.x()) << "' cy='"
       << svg_num(p.y()) << "' r='1' fill='#2a7' fill-opacity='0.6'/>\n";
  }
  for (const Point2& p : instance.goals) {
    os << "<circle class='goal' cx='" << svg_num(p.x()) << "' cy='"
       << svg_num(p.y()) << "' r='1' fill='#86c' fill-opacity='0.6'/>\n";
  }
  if (plan) {
    for (std::size_t k = 0; k < plan->moves.size(); ++k) {
      const auto& path = plan->moves[k].second;
      os << "<polyline class='move' fill='none' stroke='#137' "
            "stroke-width='0.12' points='";
      bool first = true;
      for (const Point2& p : path.waypoints()) {
        if (!first) os << ' ';
        os << svg_num(p.x()) << ',' << svg_num(p.y());
        first = false;
      }
      os << "'/>\n";
    }
    for (const IterationTrace& t : plan->traces) {
      if (t.branch != Branch::six_b) continue;
      const auto& path = plan->moves[t.iteration].second;
      const auto& pts = path.waypoints();
      if (pts.size() < 2) continue;
      os << "<polyline class='prefix-6b' fill='none' stroke='#d33' "
            "stroke-width='0.18' stroke-dasharray='0.3 0.2' points='"
         << svg_num(pts[0].x()) << ',' << svg_num(pts[0].y()) << ' '
         << svg_num(pts[1].x()) << ',' << svg_num(pts[1].y()) << "'/>\n";
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

// ---- bench -----------------------------------------------------------------

std::pair<std::vector<BenchRow>, BenchSummary> bench(
    const std::vector<std::pair<std::string, Instance>>& instances) {
  std::vector<BenchRow> rows;
  BenchSummary summary;
  double gap_total = 0.0;
  long iteration_total = 0;
  long six_b_total = 0;

  for (const auto& [id, instance] : instances) {
    BenchRow row;
    row.id = id;
    row.m = instance.agent_count();
    double min_sep = std::numeric_limits<double>::infinity();
    std::vector<Point2> terminals = instance.starts;
    terminals.insert(terminals.end(), instance.goals.begin(),
                     instance.goals.end());
    for (std::size_t i = 0; i < terminals.size(); ++i)
      for (std::size_t j = i + 1; j < terminals.size(); ++j)
        min_sep = std::min(min_sep, (terminals[i] - terminals[j]).norm());
    row.min_separation = min_sep;

    auto run_mode = [&](PlanMode mode, std::string& outcome,
                        std::optional<double>& cost,
                        std::optional<double>& initial)
        -> std::optional<PlanResult> {
      PlannerConfig config;
      config.mode = mode;
      config.separation_threshold =
          mode == PlanMode::classic ? kClassicSeparation : kRelaxedSeparation;
      if (!validate_separation(instance, config.separation_threshold).pass) {
        outcome = "rejected";
        return std::nullopt;
      }
      PlanResult result;
      try {
        result = plan(instance, config);
      } catch (const std::exception& e) {
        outcome = "failed";
        row.note = e.what();
        return std::nullopt;
      }
      const CheckReport report = check_solution(instance, result);
      if (!report.passed) {
        outcome = "failed";
        row.note = "check_solution failed";
        return std::nullopt;
      }
      outcome = "solved";
      cost = result.sum_of_costs;
      initial = result.initial_assignment_cost;
      return result;
    };

    std::optional<double> classic_initial;
    run_mode(PlanMode::classic, row.classic_outcome, row.classic_cost,
             classic_initial);
    const std::optional<PlanResult> modified =
        run_mode(PlanMode::modified, row.modified_outcome, row.modified_cost,
                 row.modified_initial_cost);
    if (modified) {
      for (const IterationTrace& t : modified->traces) {
        switch (t.branch) {
          case Branch::direct: row.direct_moves++; break;
          case Branch::six_a: row.reroutes_6a++; break;
          case Branch::six_b: row.reroutes_6b++; break;
        }
      }
      iteration_total += modified->traces.size();
      six_b_total += row.reroutes_6b;
    }

    summary.instances++;
    if (row.classic_outcome != "rejected") summary.classic_accepted++;
    if (row.classic_outcome == "solved") summary.classic_solved++;
    if (row.modified_outcome != "rejected") summary.modified_accepted++;
    if (row.modified_outcome == "solved") summary.modified_solved++;
    if (row.classic_cost && row.modified_cost) {
      gap_total += *row.classic_cost - *row.modified_cost;
      summary.cost_gap_samples++;
    }
    rows.push_back(std::move(row));
  }
  if (summary.cost_gap_samples > 0)
    summary.mean_cost_gap = gap_total / summary.cost_gap_samples;
  if (iteration_total > 0)
    summary.branch_6b_frequency =
        static_cast<double>(six_b_total) / iteration_total;
  return {std::move(rows), summary};
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "instance,m,min_separation,classic_outcome,classic_cost,"
        "modified_outcome,modified_cost,modified_initial_cost,"
        "direct_moves,reroutes_6a,reroutes_6b\n";
  for (const BenchRow& row : rows) {
    os << row.id << ',' << row.m << ',' << format_double(row.min_separation)
       << ',' << row.classic_outcome << ','
       << (row.classic_cost ? format_double(*row.classic_cost) : "-") << ','
       << row.modified_outcome << ','
       << (row.modified_cost ? format_double(*row.modified_cost) : "-") << ','
       << (row.modified_initial_cost
               ? format_double(*row.modified_initial_cost)
               : "-")
       << ',' << row.direct_moves << ',' << row.reroutes_6a << ','
       << row.reroutes_6b << '\n';
  }
  return os.str();
}

std::string bench_summary_text(const BenchSummary& s) {
  std::ostringstream os;
  os << "instances:           " << s.instances << '\n';
  os << "classic accepted:    " << s.classic_accepted << '\n';
  os << "classic solved:      " << s.classic_solved << '\n';
  os << "modified accepted:   " << s.modified_accepted << '\n';
  os << "modified solved:     " << s.modified_solved << '\n';
  os << "cost-gap samples:    " << s.cost_gap_samples << '\n';
  os << "mean cost gap:       " << format_double(s.mean_cost_gap) << '\n';
  os << "branch-6b frequency: " << format_double(s.branch_6b_frequency)
     << '\n';
  return os.str();
}

}  // namespace amapf

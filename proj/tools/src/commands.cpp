#include "staymap/cli/commands.hpp"

#include "staymap/cli/bench.hpp"
#include "staymap/cli/formats.hpp"
#include "staymap/generators.hpp"
#include "staymap/oracle.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace staymap::cli {

namespace {

// Bad flags, files or values supplied by the user; reported with exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational number_arg(const std::string& text, const std::string& flag) {
  auto v = parse_rational(text);
  if (!v) throw InputError(flag + ": not a decimal number: '" + text + "'");
  return *v;
}

std::vector<Rational> number_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(number_arg(text.substr(start, comma == std::string::npos ? comma : comma - start), flag));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Trajectory<Rational> load(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return read_trajectory_csv(in);
    std::ifstream file(path);
    if (!file) throw InputError(path + ": cannot open");
    return read_trajectory_csv(file);
  } catch (const ParseError& e) {
    throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void require_dimension(const Trajectory<Rational>& traj, int dim, const std::string& command) {
  if (traj.dimension() != dim) {
    throw InputError(command + " needs a " + std::to_string(dim) + "D trajectory, got " +
                     std::to_string(traj.dimension()) + "D");
  }
}

struct CommonArgs {
  std::string input;
  std::string side;
  std::string gap;
  std::string epsilon;

  StayParams<Rational> params() const {
    StayParams<Rational> p{number_arg(side, "--side"), number_arg(gap, "--gap"),
                           epsilon.empty() ? Rational(0) : number_arg(epsilon, "--epsilon")};
    p.validate();
    if (p.epsilon < 0) throw InputError("--epsilon must not be negative");
    return p;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_epsilon, bool epsilon_required) {
  cmd->add_option("input", args.input, "trajectory CSV, '-' for stdin")->required();
  cmd->add_option("-s,--side", args.side, "square side length")->required();
  cmd->add_option("-g,--gap", args.gap, "allowed continuous absence")->required();
  if (with_epsilon) {
    auto* opt = cmd->add_option("-e,--epsilon", args.epsilon, "approximation factor");
    if (epsilon_required) opt->required();
  }
}

int cmd_staymap1d(const CommonArgs& args, std::istream& in, std::ostream& out) {
  const auto traj = load(args.input, in);
  require_dimension(traj, 1, "staymap1d");
  write_region_json(out, staymap_1d(traj, args.params()));
  return kExitOk;
}

int cmd_staymap2d(const CommonArgs& args, const std::string& svg_path, std::istream& in,
                  std::ostream& out, std::ostream& err) {
  const auto traj = load(args.input, in);
  require_dimension(traj, 2, "staymap2d");
  auto params = args.params();
  if (!(params.epsilon > 0)) throw InputError("--epsilon must be positive");
  const Rational duration = traj.duration();
  if (params.gap < duration && duration / params.gap < params.epsilon) {
    err << "staymap: warning: epsilon " << format_number(params.epsilon) << " exceeds D/g = "
        << format_number(duration / params.gap) << ", using D/g\n";
    params.epsilon = duration / params.gap;
  }
  const auto map = approx_staymap(traj, params);
  write_region_json(out, map);
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw InputError(svg_path + ": cannot write");
    write_svg(svg, traj, map);
  }
  return kExitOk;
}

nlohmann::json point_json(const Vec2<Rational>& p, int dim) {
  if (dim == 1) return json_number(p.x);
  return nlohmann::json::array({json_number(p.x), json_number(p.y)});
}

int cmd_oracle(const CommonArgs& args, const std::string& probe, const std::string& grid,
               bool summary_only, std::istream& in, std::ostream& out) {
  const auto traj = load(args.input, in);
  const auto params = args.params();
  const int dim = traj.dimension();

  if (!probe.empty()) {
    const auto v = number_list(probe, "--probe");
    if (v.size() != static_cast<std::size_t>(dim)) {
      throw InputError("--probe needs " + std::to_string(dim) + " coordinate(s) for a " +
                       std::to_string(dim) + "D trajectory");
    }
    const Vec2<Rational> p{v[0], dim == 2 ? v[1] : Rational(0)};
    const auto report = max_gap(traj, p, params.side);
    nlohmann::json doc;
    doc["probe"] = point_json(p, dim);
    doc["max_gap"] = json_number(report.max_gap);
    doc["witness"] = {json_number(report.witness.begin), json_number(report.witness.end)};
    doc["class"] = to_string(classify(report.max_gap, params));
    out << doc.dump() << '\n';
    return kExitOk;
  }

  const auto v = number_list(grid, "--grid");
  GridSpec<Rational> spec;
  if (dim == 1 && v.size() == 3) {
    spec = {{v[0], 0}, {v[1], 0}, v[2]};
  } else if (dim == 2 && v.size() == 5) {
    spec = {{v[0], v[1]}, {v[2], v[3]}, v[4]};
  } else {
    throw InputError(dim == 1 ? "--grid needs XMIN,XMAX,STEP for a 1D trajectory"
                              : "--grid needs XMIN,YMIN,XMAX,YMAX,STEP for a 2D trajectory");
  }
  const auto scan = grid_scan(traj, spec, params);
  nlohmann::json doc;
  doc["nx"] = scan.nx;
  doc["ny"] = scan.ny;
  nlohmann::json counts;
  nlohmann::json clusters;
  for (auto c : {Classification::Exact, Classification::ApproxOnly, Classification::Outside}) {
    counts[to_string(c)] = scan.count(c);
    if (c != Classification::Outside) clusters[to_string(c)] = count_clusters(scan, c);
  }
  doc["counts"] = std::move(counts);
  doc["clusters"] = std::move(clusters);
  if (!summary_only) {
    auto points = nlohmann::json::array();
    for (std::size_t j = 0; j < scan.ny; ++j) {
      for (std::size_t i = 0; i < scan.nx; ++i) {
        points.push_back({{"probe", point_json(scan.point(i, j), dim)},
                          {"max_gap", json_number(scan.gaps[j * scan.nx + i])},
                          {"class", to_string(scan.at(i, j))}});
      }
    }
    doc["points"] = std::move(points);
  }
  out << doc.dump() << '\n';
  return kExitOk;
}

struct GridArgs {
  int m = 1;
  std::string side = "1";
  std::string gap = "1";
  std::string speed_factor = "100";
};

struct WalkArgs {
  std::size_t n = 50;
  int dim = 2;
  std::uint64_t seed = 1;
  double step = 1;
  double dt = 1;
};

int cmd_generate_grid(const GridArgs& args, std::ostream& out) {
  GridConstructionParams p;
  p.m = args.m;
  p.side = number_arg(args.side, "--side");
  p.gap = number_arg(args.gap, "--gap");
  p.speed_factor = number_arg(args.speed_factor, "--speed-factor");
  write_trajectory_csv(out, grid_construction(p));
  return kExitOk;
}

int cmd_generate_walk(const WalkArgs& args, std::ostream& out) {
  if (!(args.step > 0) || !(args.dt > 0)) throw InputError("--step and --dt must be positive");
  // The walk lives on a dyadic lattice, so the exact values print as short decimals.
  write_trajectory_csv(out, trajectory_cast<Rational>(
                                random_walk(args.n, args.dim, args.seed, args.step, args.dt)));
  return kExitOk;
}

struct BenchArgs {
  std::string suite;
  int min_log2 = 14;
  int max_log2 = 20;
  int repeats = 3;
  std::uint64_t seed = 1;
  std::size_t n = 30;
  std::string epsilons = "1,0.5,0.25,0.125";
  std::string ms = "2,4,8";
  std::string epsilon = "0.05";
};

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  if (args.suite == "1d-scaling") {
    Scaling1dOptions opt;
    opt.min_log2 = args.min_log2;
    opt.max_log2 = args.max_log2;
    opt.repeats = args.repeats;
    opt.seed = args.seed;
    if (opt.min_log2 < 1 || opt.max_log2 > 26 || opt.max_log2 < opt.min_log2) {
      throw InputError("--min-log2/--max-log2 must satisfy 1 <= min <= max <= 26");
    }
    print(out, run_1d_scaling(opt));
  } else if (args.suite == "2d-scaling") {
    const auto traj = trajectory_cast<Rational>(random_walk(args.n, 2, args.seed));
    print(out, run_2d_scaling(traj, Rational(2), traj.duration() / 4,
                              number_list(args.epsilons, "--epsilons")));
  } else {
    std::vector<int> ms;
    for (const auto& v : number_list(args.ms, "--ms")) {
      if (denominator(v) != 1 || v < 1 || v > 64) throw InputError("--ms takes integers in [1, 64]");
      ms.push_back(numerator(v).convert_to<int>());
    }
    print(out, run_grid_faces(ms, number_arg(args.epsilon, "--epsilon")));
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Stay points with bounded gaps for trajectories", "staymap"};
  app.require_subcommand(1);

  CommonArgs a1;
  auto* s1 = app.add_subcommand("staymap1d", "exact stay map of a 1D trajectory");
  add_common(s1, a1, false, false);

  CommonArgs a2;
  std::string svg_path;
  auto* s2 = app.add_subcommand("staymap2d", "(1+epsilon)-approximate stay map of a 2D trajectory");
  add_common(s2, a2, true, true);
  s2->add_option("--svg", svg_path, "also render trajectory and map to this SVG file");

  CommonArgs ao;
  std::string probe;
  std::string grid;
  bool summary_only = false;
  auto* so = app.add_subcommand("oracle", "brute-force gap report for probe points");
  add_common(so, ao, true, false);
  auto* probe_opt = so->add_option("--probe", probe, "corner X (1D) or X,Y (2D)");
  auto* grid_opt = so->add_option("--grid", grid, "XMIN,YMIN,XMAX,YMAX,STEP (1D: XMIN,XMAX,STEP)");
  probe_opt->excludes(grid_opt);
  so->add_flag("--summary", summary_only, "with --grid, omit the per-point list");

  auto* sg = app.add_subcommand("generate", "write a synthetic trajectory as CSV");
  sg->require_subcommand(1);
  GridArgs ga;
  auto* sgg = sg->add_subcommand("grid", "strip construction with an m x m grid stay map");
  sgg->add_option("--m", ga.m, "strips per direction")->required()->check(CLI::Range(1, 1000));
  sgg->add_option("-s,--side", ga.side, "square side length");
  sgg->add_option("-g,--gap", ga.gap, "gap bound");
  sgg->add_option("--speed-factor", ga.speed_factor, "quick move duration divisor");
  WalkArgs wa;
  auto* sgw = sg->add_subcommand("walk", "seeded random walk");
  sgw->add_option("--n", wa.n, "vertex count")->required()->check(CLI::Range(1, 1 << 26));
  sgw->add_option("--dim", wa.dim, "1 or 2")->check(CLI::IsMember({1, 2}));
  sgw->add_option("--seed", wa.seed, "random seed");
  sgw->add_option("--step", wa.step, "maximum step length");
  sgw->add_option("--dt", wa.dt, "maximum time step");

  BenchArgs ba;
  auto* sb = app.add_subcommand("bench", "scaling tables");
  sb->add_option("suite", ba.suite, "1d-scaling | 2d-scaling | grid-faces")
      ->required()
      ->check(CLI::IsMember({"1d-scaling", "2d-scaling", "grid-faces"}));
  sb->add_option("--min-log2", ba.min_log2, "1d-scaling: smallest n = 2^k");
  sb->add_option("--max-log2", ba.max_log2, "1d-scaling: largest n = 2^k");
  sb->add_option("--repeats", ba.repeats, "1d-scaling: best of this many runs");
  sb->add_option("--seed", ba.seed, "random seed");
  sb->add_option("--n", ba.n, "2d-scaling: walk vertex count")->check(CLI::Range(2, 10000));
  sb->add_option("--epsilons", ba.epsilons, "2d-scaling: comma-separated epsilons");
  sb->add_option("--ms", ba.ms, "grid-faces: comma-separated m values");
  sb->add_option("-e,--epsilon", ba.epsilon, "grid-faces: epsilon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (s1->parsed()) return cmd_staymap1d(a1, in, out);
    if (s2->parsed()) return cmd_staymap2d(a2, svg_path, in, out, err);
    if (so->parsed()) {
      if (probe.empty() && grid.empty()) throw InputError("oracle needs --probe or --grid");
      return cmd_oracle(ao, probe, grid, summary_only, in, out);
    }
    if (sgg->parsed()) return cmd_generate_grid(ga, out);
    if (sgw->parsed()) return cmd_generate_walk(wa, out);
    if (sb->parsed()) return cmd_bench(ba, out);
  } catch (const InputError& e) {
    err << "staymap: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "staymap: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "staymap: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  err << "staymap: no command\n";
  return kExitInput;
}

}  // namespace staymap::cli

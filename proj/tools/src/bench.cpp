#include "staymap/cli/bench.hpp"

#include "staymap/generators.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>

namespace staymap::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* kind_name(IntervalKind k) {
  switch (k) {
    case IntervalKind::Empty: return "empty";
    case IntervalKind::Bounded: return "bounded";
    case IntervalKind::WholeLine: return "whole_line";
  }
  return "?";
}

std::string fixed(double v, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

std::string ratio(double now, double before) {
  if (!(before > 0)) return "-";
  return fixed(now / before, 2);
}

}  // namespace

std::vector<Scaling1dRow> run_1d_scaling(const Scaling1dOptions& opt) {
  std::vector<Scaling1dRow> rows;
  const StayParams<double> params{opt.side, opt.gap, 0.0};
  for (int k = opt.min_log2; k <= opt.max_log2; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const auto traj = concatenated_walk(n, opt.block, opt.seed);
    Scaling1dRow row;
    row.n = n;
    row.seconds = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, opt.repeats); ++r) {
      Staymap1dStats stats;
      const auto start = Clock::now();
      const auto map = staymap_1d(traj, params, &stats);
      row.seconds = std::min(row.seconds, seconds_since(start));
      row.events = stats.event_count;
      row.candidates = stats.candidate_count;
      row.result = map.kind;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Scaling2dRow> run_2d_scaling(const Trajectory<Rational>& traj, const Rational& side,
                                         const Rational& gap, const std::vector<Rational>& epsilons) {
  std::vector<Scaling2dRow> rows;
  for (const auto& eps : epsilons) {
    RegionSet out;
    const auto start = Clock::now();
    const auto stats = approx_staymap_stats(traj, StayParams<Rational>{side, gap, eps}, out);
    rows.push_back({eps, stats.snapshot_count, stats.output_polygons, stats.output_vertices,
                    seconds_since(start)});
  }
  return rows;
}

std::vector<GridFacesRow> run_grid_faces(const std::vector<int>& ms, const Rational& epsilon) {
  std::vector<GridFacesRow> rows;
  for (int m : ms) {
    GridConstructionParams gp;
    gp.m = m;
    const auto traj = grid_construction(gp);
    RegionSet out;
    const auto start = Clock::now();
    const auto stats = approx_staymap_stats(traj, StayParams<Rational>{gp.side, gp.gap, epsilon}, out);
    rows.push_back({m, traj.size(), stats.snapshot_count, stats.output_polygons,
                    stats.output_vertices, seconds_since(start)});
  }
  return rows;
}

void print(std::ostream& out, const std::vector<Scaling1dRow>& rows) {
  out << "n\tseconds\tratio\tevents\tcandidates\tresult\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << r.n << '\t' << fixed(r.seconds, 6) << '\t'
        << (i == 0 ? "-" : ratio(r.seconds, rows[i - 1].seconds)) << '\t' << r.events << '\t'
        << r.candidates << '\t' << kind_name(r.result) << '\n';
  }
}

void print(std::ostream& out, const std::vector<Scaling2dRow>& rows) {
  out << "epsilon\tsnapshots\tratio\tpolygons\tvertices\tseconds\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << format_number(r.epsilon) << '\t' << r.snapshots << '\t'
        << (i == 0 ? "-" : ratio(double(r.snapshots), double(rows[i - 1].snapshots))) << '\t'
        << r.output_polygons << '\t' << r.output_vertices << '\t' << fixed(r.seconds, 4) << '\n';
  }
}

void print(std::ostream& out, const std::vector<GridFacesRow>& rows) {
  out << "m\tn\tsnapshots\tfaces\tratio\tface_vertices\tseconds\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << r.m << '\t' << r.vertices << '\t' << r.snapshots << '\t' << r.faces << '\t'
        << (i == 0 ? "-" : ratio(double(r.faces), double(rows[i - 1].faces))) << '\t'
        << r.face_vertices << '\t' << fixed(r.seconds, 4) << '\n';
  }
}

}  // namespace staymap::cli

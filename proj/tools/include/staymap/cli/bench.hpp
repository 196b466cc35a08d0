#pragma once

// Scaling suites behind `staymap bench`. Each returns one row per measured
// size; printing is left to the caller.

#include "staymap/staymap1d.hpp"
#include "staymap/staymap2d.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace staymap::cli {

struct Scaling1dRow {
  std::size_t n = 0;
  double seconds = 0;  ///< best of the repeats
  std::size_t events = 0;
  std::size_t candidates = 0;
  IntervalKind result = IntervalKind::Empty;
};

struct Scaling1dOptions {
  int min_log2 = 14;
  int max_log2 = 20;
  int repeats = 3;
  std::uint64_t seed = 1;
  std::size_t block = 64;  ///< vertices between returns to the origin
  double side = 4;
  double gap = 40;
};

/// Double-precision staymap_1d on concatenated random walks of 2^k vertices.
std::vector<Scaling1dRow> run_1d_scaling(const Scaling1dOptions& opt);

struct Scaling2dRow {
  Rational epsilon;
  std::size_t snapshots = 0;
  std::size_t output_polygons = 0;
  std::size_t output_vertices = 0;
  double seconds = 0;
};

/// approx_staymap on one trajectory for each epsilon in turn.
std::vector<Scaling2dRow> run_2d_scaling(const Trajectory<Rational>& traj, const Rational& side,
                                         const Rational& gap, const std::vector<Rational>& epsilons);

struct GridFacesRow {
  int m = 0;
  std::size_t vertices = 0;  ///< trajectory size
  std::size_t snapshots = 0;
  std::size_t faces = 0;
  std::size_t face_vertices = 0;
  double seconds = 0;
};

/// approx_staymap of the strip construction (s = g = 1) for each m.
std::vector<GridFacesRow> run_grid_faces(const std::vector<int>& ms, const Rational& epsilon);

void print(std::ostream& out, const std::vector<Scaling1dRow>& rows);
void print(std::ostream& out, const std::vector<Scaling2dRow>& rows);
void print(std::ostream& out, const std::vector<GridFacesRow>& rows);

}  // namespace staymap::cli

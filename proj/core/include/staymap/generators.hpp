#pragma once

// Synthetic trajectories: the adversarial strip construction whose stay map
// has m^2 faces, and seeded random walks for property tests and scaling runs.

#include "staymap/geom_core.hpp"

#include <cstdint>

namespace staymap {

struct GridConstructionParams {
  int m = 1;                   ///< strips per direction
  Rational side{1};            ///< s
  Rational gap{1};             ///< g
  Rational speed_factor{100};  ///< quick moves last (g / m) / speed_factor

  /// Throws std::invalid_argument unless m >= 1, s > 0, g > 0, speed_factor >= 1.
  void validate() const;
};

/// 2D trajectory with 4m + 19 vertices whose exact stay map is an m x m grid
/// of small squares inside [-s, 0]^2.
///
/// Each of the two phases (the second rotated by 90 degrees about the origin)
/// runs, with h = g / m and u = s / m:
///   (0,0) -> (2s,0) at g/2, back to (0,0) at g - h/2 through two vertices far
///   below the band the strips live in; then every h a quick move of u to the
///   right, ending at (s,0); a quick hidden detour to (-s,0); a slow sweep to
///   (0,0) taking g; a dwell of g at the origin.
/// A corner survives the phase iff the staircase leaves its square less than
/// h/2 before the sweep re-enters it, which cuts m strips of width ~u/2.
Trajectory<Rational> grid_construction(const GridConstructionParams& params);

/// Deterministic for a fixed seed. Time increments lie in (0, dt_scale], step
/// lengths in [0, step_scale]; all values are multiples of 1/1024 of the
/// scales so the trajectory is exactly representable as Rational.
Trajectory<double> random_walk(std::size_t n, int dim, std::uint64_t seed, double step_scale = 1.0,
                               double dt_scale = 1.0);

/// Blocks of `block` random-walk vertices, each block re-anchored to start at
/// the origin, so the entity keeps returning near the origin however long the
/// trajectory is. 1D.
Trajectory<double> concatenated_walk(std::size_t n, std::size_t block, std::uint64_t seed);

}  // namespace staymap

#pragma once

// Brute-force ground truth: the longest continuous absence of the entity from
// one square (2D) or interval (1D), evaluated edge by edge. Deliberately
// independent of the sweep and snapshot machinery it is used to check.

#include "staymap/geom_core.hpp"

#include <cstddef>
#include <vector>

namespace staymap {

template <class T>
struct GapReport {
  T max_gap{};
  TimeInterval<T> witness{};  ///< the longest absence (first one on ties)
};

enum class Classification {
  Exact,       ///< max gap <= g
  ApproxOnly,  ///< g < max gap <= (1 + epsilon) g
  Outside,
};

const char* to_string(Classification c);

/// Merged closed presence intervals of the entity in the region with lower-left
/// corner `corner` (1D: only corner.x is used).
template <class T>
std::vector<TimeInterval<T>> presence_intervals(const Trajectory<T>& traj, const Vec2<T>& corner,
                                                const T& side);

/// Complement of presence_intervals within [first.t, last.t]; includes the
/// lead-in before the first visit and the tail after the last one.
template <class T>
std::vector<TimeInterval<T>> absence_intervals(const Trajectory<T>& traj, const Vec2<T>& corner,
                                               const T& side);

/// max_gap = D for a region that is never visited.
template <class T>
GapReport<T> max_gap(const Trajectory<T>& traj, const Vec2<T>& corner, const T& side);

template <class T>
Classification classify(const T& max_gap, const StayParams<T>& params);

template <class T>
Classification oracle_classify(const Trajectory<T>& traj, const Vec2<T>& corner,
                               const StayParams<T>& params);

/// Lattice min + (i, j) * step for all points not beyond max. For 1D
/// trajectories only the x axis is scanned (ny == 1).
template <class T>
struct GridSpec {
  Vec2<T> min{};
  Vec2<T> max{};
  T step{};
};

template <class T>
struct GridScan {
  GridSpec<T> spec;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<T> gaps;  ///< row-major, index j * nx + i
  std::vector<Classification> classes;

  Vec2<T> point(std::size_t i, std::size_t j) const;
  Classification at(std::size_t i, std::size_t j) const { return classes[j * nx + i]; }
  std::size_t count(Classification c) const;
};

/// Throws std::invalid_argument for a non-positive step or an inverted box.
template <class T>
GridScan<T> grid_scan(const Trajectory<T>& traj, const GridSpec<T>& spec,
                      const StayParams<T>& params);

/// Connected components (8-neighbourhood) of lattice points with class `c`.
template <class T>
std::size_t count_clusters(const GridScan<T>& scan, Classification c);

}  // namespace staymap

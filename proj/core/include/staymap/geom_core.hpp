#pragma once

// Trajectory representation and the geometric primitives shared by the stay-map
// algorithms and the brute-force oracle.
//
// Conventions:
//   * squares (2D) and intervals (1D) are closed; touching the boundary counts
//     as being inside,
//   * a square is identified by its lower-left corner, its side length comes
//     from StayParams,
//   * 1D trajectories store their coordinate in pos.x and keep pos.y == 0.

#include "staymap/number.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace staymap {

template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
};

template <class T>
struct Vertex {
  T t{};
  Vec2<T> pos{};

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Closed time interval [begin, end].
template <class T>
struct TimeInterval {
  T begin{};
  T end{};

  T length() const { return end - begin; }
  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

class TrajectoryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Time-ordered polyline; the entity moves along each edge at constant speed.
/// Immutable after construction.
template <class T>
class Trajectory {
 public:
  /// Throws TrajectoryError unless there is at least one vertex, timestamps
  /// strictly increase, dimension is 1 or 2, and 1D vertices have y == 0.
  Trajectory(std::vector<Vertex<T>> vertices, int dimension);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Vertex<T>> vertices() const noexcept { return vertices_; }
  const Vertex<T>& operator[](std::size_t i) const { return vertices_[i]; }
  const Vertex<T>& front() const noexcept { return vertices_.front(); }
  const Vertex<T>& back() const noexcept { return vertices_.back(); }
  std::size_t edge_count() const noexcept { return vertices_.size() - 1; }

  /// D = last.t - first.t
  T duration() const { return vertices_.back().t - vertices_.front().t; }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<Vertex<T>> vertices_;
  int dimension_;
};

/// Builds a 1D trajectory from (t, x) pairs.
template <class T>
Trajectory<T> make_trajectory_1d(std::span<const std::pair<T, T>> samples);

/// Lossless for double -> Rational, rounding for Rational -> double.
template <class To, class From>
Trajectory<To> trajectory_cast(const Trajectory<From>& traj);

template <class T>
struct StayParams {
  T side{};     ///< square side length s
  T gap{};      ///< allowed continuous absence g
  T epsilon{};  ///< approximation factor, 2D only

  /// Throws std::invalid_argument unless side > 0 and gap > 0.
  void validate() const;
};

/// Axis-aligned square of side s identified by its lower-left corner.
template <class T>
struct Square {
  Vec2<T> lower_left{};
};

/// Convex polygon, vertices counterclockwise, no repeated closing vertex.
template <class T>
struct ConvexPolygon {
  std::vector<Vec2<T>> vertices;
};

/// Linear interpolation along the bracketing edge; exact at vertices.
/// Throws std::out_of_range outside [first.t, last.t].
template <class T>
Vec2<T> position_at(const Trajectory<T>& traj, const T& t);

/// T(a, b): the vertices strictly inside (a, b) plus interpolated endpoints.
/// Throws std::out_of_range if a > b or the interval leaves the trajectory.
template <class T>
Trajectory<T> subtrajectory(const Trajectory<T>& traj, const T& a, const T& b);

/// Maximal closed sub-interval of the edge's time span during which the
/// position lies in the closed square [ll, ll + side]^2. Convexity means there
/// is at most one.
template <class T>
std::optional<TimeInterval<T>> square_entry_exit(const Vertex<T>& u, const Vertex<T>& v,
                                                 const Square<T>& sq, const T& side);

/// 1D counterpart of square_entry_exit against [left, left + side].
template <class T>
std::optional<TimeInterval<T>> interval_entry_exit(const Vertex<T>& u, const Vertex<T>& v,
                                                   const T& left, const T& side);

}  // namespace staymap

#include "staymap/geom_core.hpp"

#include <algorithm>
#include <string>

namespace staymap {

template <class T>
Trajectory<T>::Trajectory(std::vector<Vertex<T>> vertices, int dimension)
    : vertices_(std::move(vertices)), dimension_(dimension) {
  if (dimension_ != 1 && dimension_ != 2) {
    throw TrajectoryError("trajectory dimension must be 1 or 2, got " + std::to_string(dimension_));
  }
  if (vertices_.empty()) throw TrajectoryError("trajectory needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (dimension_ == 1 && vertices_[i].pos.y != 0) {
      throw TrajectoryError("1D trajectory vertex " + std::to_string(i) + " has a y coordinate");
    }
    if (i > 0 && !(vertices_[i - 1].t < vertices_[i].t)) {
      throw TrajectoryError("timestamps must be strictly increasing (vertex " + std::to_string(i) +
                            ")");
    }
  }
}

template <class T>
Trajectory<T> make_trajectory_1d(std::span<const std::pair<T, T>> samples) {
  std::vector<Vertex<T>> vs;
  vs.reserve(samples.size());
  for (const auto& [t, x] : samples) vs.push_back({t, {x, T(0)}});
  return Trajectory<T>(std::move(vs), 1);
}

template <class To, class From>
Trajectory<To> trajectory_cast(const Trajectory<From>& traj) {
  std::vector<Vertex<To>> vs;
  vs.reserve(traj.size());
  for (const auto& v : traj.vertices()) {
    if constexpr (std::is_same_v<To, double>) {
      vs.push_back({to_double(v.t), {to_double(v.pos.x), to_double(v.pos.y)}});
    } else {
      vs.push_back({to_rational(v.t), {to_rational(v.pos.x), to_rational(v.pos.y)}});
    }
  }
  return Trajectory<To>(std::move(vs), traj.dimension());
}

template <class T>
void StayParams<T>::validate() const {
  if (!(side > 0)) throw std::invalid_argument("side length must be positive");
  if (!(gap > 0)) throw std::invalid_argument("gap bound must be positive");
}

namespace {

template <class T>
Vec2<T> lerp(const Vertex<T>& u, const Vertex<T>& v, const T& t) {
  if (t == u.t) return u.pos;
  if (t == v.t) return v.pos;
  const T f = (t - u.t) / (v.t - u.t);
  return {u.pos.x + (v.pos.x - u.pos.x) * f, u.pos.y + (v.pos.y - u.pos.y) * f};
}

// Index of the edge whose closed time span contains t.
template <class T>
std::size_t edge_at(const Trajectory<T>& traj, const T& t) {
  const auto vs = traj.vertices();
  auto it = std::upper_bound(vs.begin(), vs.end(), t,
                             [](const T& value, const Vertex<T>& v) { return value < v.t; });
  std::size_t i = static_cast<std::size_t>(it - vs.begin());
  return i == 0 ? 0 : std::min(i - 1, traj.edge_count() - 1);
}

// Restricts the edge parameter range [lo, hi] to where a + (b - a) * lambda
// lies in [min, max]. Returns false if the range becomes empty.
template <class T>
bool clip_axis(const T& a, const T& b, const T& min, const T& max, T& lo, T& hi) {
  const T d = b - a;
  if (d == 0) return !(a < min || a > max);
  T l1 = (min - a) / d;
  T l2 = (max - a) / d;
  if (l2 < l1) std::swap(l1, l2);
  if (l1 > lo) lo = l1;
  if (l2 < hi) hi = l2;
  return !(hi < lo);
}

template <class T>
TimeInterval<T> to_time(const Vertex<T>& u, const Vertex<T>& v, const T& lo, const T& hi) {
  const T dt = v.t - u.t;
  return {lo == 0 ? u.t : u.t + dt * lo, hi == 1 ? v.t : u.t + dt * hi};
}

}  // namespace

template <class T>
Vec2<T> position_at(const Trajectory<T>& traj, const T& t) {
  if (t < traj.front().t || t > traj.back().t) {
    throw std::out_of_range("time outside the trajectory's span");
  }
  if (traj.size() == 1) return traj.front().pos;
  const std::size_t e = edge_at(traj, t);
  return lerp(traj[e], traj[e + 1], t);
}

template <class T>
Trajectory<T> subtrajectory(const Trajectory<T>& traj, const T& a, const T& b) {
  if (b < a) throw std::out_of_range("subtrajectory interval is inverted");
  if (a < traj.front().t || b > traj.back().t) {
    throw std::out_of_range("subtrajectory interval leaves the trajectory's span");
  }
  std::vector<Vertex<T>> out;
  out.push_back({a, position_at(traj, a)});
  if (b == a) return Trajectory<T>(std::move(out), traj.dimension());
  for (const auto& v : traj.vertices()) {
    if (a < v.t && v.t < b) out.push_back(v);
  }
  out.push_back({b, position_at(traj, b)});
  return Trajectory<T>(std::move(out), traj.dimension());
}

template <class T>
std::optional<TimeInterval<T>> square_entry_exit(const Vertex<T>& u, const Vertex<T>& v,
                                                 const Square<T>& sq, const T& side) {
  T lo(0);
  T hi(1);
  const auto& ll = sq.lower_left;
  if (!clip_axis(u.pos.x, v.pos.x, ll.x, ll.x + side, lo, hi)) return std::nullopt;
  if (!clip_axis(u.pos.y, v.pos.y, ll.y, ll.y + side, lo, hi)) return std::nullopt;
  return to_time(u, v, lo, hi);
}

template <class T>
std::optional<TimeInterval<T>> interval_entry_exit(const Vertex<T>& u, const Vertex<T>& v,
                                                   const T& left, const T& side) {
  T lo(0);
  T hi(1);
  if (!clip_axis(u.pos.x, v.pos.x, left, left + side, lo, hi)) return std::nullopt;
  return to_time(u, v, lo, hi);
}

#define STAYMAP_INSTANTIATE(T)                                                                  \
  template class Trajectory<T>;                                                                 \
  template struct StayParams<T>;                                                                \
  template Trajectory<T> make_trajectory_1d(std::span<const std::pair<T, T>>);                  \
  template Vec2<T> position_at(const Trajectory<T>&, const T&);                                 \
  template Trajectory<T> subtrajectory(const Trajectory<T>&, const T&, const T&);               \
  template std::optional<TimeInterval<T>> square_entry_exit(const Vertex<T>&, const Vertex<T>&, \
                                                            const Square<T>&, const T&);        \
  template std::optional<TimeInterval<T>> interval_entry_exit(                                  \
      const Vertex<T>&, const Vertex<T>&, const T&, const T&);

STAYMAP_INSTANTIATE(double)
STAYMAP_INSTANTIATE(Rational)
#undef STAYMAP_INSTANTIATE

template Trajectory<double> trajectory_cast(const Trajectory<Rational>&);
template Trajectory<Rational> trajectory_cast(const Trajectory<double>&);
template Trajectory<double> trajectory_cast(const Trajectory<double>&);
template Trajectory<Rational> trajectory_cast(const Trajectory<Rational>&);

}  // namespace staymap

#pragma once

// Exact stay map of a one-dimensional trajectory.
//
// The stay map of a 1D trajectory is a single closed interval (or empty, or the
// whole line when the trajectory is no longer than the gap bound). Its
// endpoints lie on an event point or at distance s from one, so the map is
// found by binary search over those candidates with an O(n) membership test
// that also tells on which side of a probe the map lies.

#include "staymap/geom_core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace staymap {

enum class IntervalKind { Empty, Bounded, WholeLine };

template <class T>
struct Interval1D {
  IntervalKind kind = IntervalKind::Empty;
  T left{};
  T right{};

  static Interval1D empty() { return {}; }
  static Interval1D bounded(T l, T r) { return {IntervalKind::Bounded, std::move(l), std::move(r)}; }
  static Interval1D whole_line() { return {IntervalKind::WholeLine, T{}, T{}}; }

  bool contains(const T& p) const {
    switch (kind) {
      case IntervalKind::Empty: return false;
      case IntervalKind::WholeLine: return true;
      case IntervalKind::Bounded: return !(p < left) && !(right < p);
    }
    return false;
  }
  friend bool operator==(const Interval1D&, const Interval1D&) = default;
};

enum class EventKind {
  Vertex,      ///< a trajectory vertex lies here
  GapEqualsG,  ///< two time-contiguous visits (or start/end and a visit) are exactly g apart
};

template <class T>
struct EventPoint {
  T position{};
  EventKind kind = EventKind::Vertex;
};

/// Side on which the stay map lies relative to a probe p.
enum class MembershipVerdict {
  Inside,      ///< p is in the stay map
  MapIsLeft,   ///< the whole map lies left of p
  MapIsRight,  ///< the whole map lies right of p
  MapIsEmpty,  ///< violating excursions on both sides; the map is empty
};

const char* to_string(MembershipVerdict v);

/// One pass over the edges: measures every maximal excursion outside
/// [p, p + s], including the lead-in and the tail. Excursions of duration
/// exactly g are allowed. Requires a 1D trajectory.
template <class T>
MembershipVerdict membership_1d(const Trajectory<T>& traj, const T& p, const StayParams<T>& params);

/// Event points sorted by position: every vertex position once, plus every
/// level y at which two consecutive crossings of y (or the trajectory start
/// and the first crossing, or the last crossing and the end) are exactly
/// `gap` apart. Positions may repeat when several gaps hit g at one level.
/// Plane sweep over the time-location plane, O(n log n). Requires n >= 2.
template <class T>
std::vector<EventPoint<T>> event_points(const Trajectory<T>& traj, const T& gap);

/// {e, e - s, e + s} over all events, sorted and deduplicated.
template <class T>
std::vector<T> candidate_positions(std::span<const EventPoint<T>> events, const T& side);

struct Staymap1dStats {
  std::size_t event_count = 0;
  std::size_t candidate_count = 0;
  std::size_t membership_calls = 0;
};

/// Exact stay map. WholeLine when D <= g (single-vertex trajectories
/// included), otherwise Empty or Bounded(left, right) with closed ends.
template <class T>
Interval1D<T> staymap_1d(const Trajectory<T>& traj, const StayParams<T>& params,
                         Staymap1dStats* stats = nullptr);

}  // namespace staymap

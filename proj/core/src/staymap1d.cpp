#include "staymap/staymap1d.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace staymap {

const char* to_string(MembershipVerdict v) {
  switch (v) {
    case MembershipVerdict::Inside: return "inside";
    case MembershipVerdict::MapIsLeft: return "map_is_left";
    case MembershipVerdict::MapIsRight: return "map_is_right";
    case MembershipVerdict::MapIsEmpty: return "map_is_empty";
  }
  return "?";
}

namespace {

template <class T>
void require_1d(const Trajectory<T>& traj) {
  if (traj.dimension() != 1) throw std::invalid_argument("expected a 1D trajectory");
}

enum class Side { Below, Above };

}  // namespace

template <class T>
MembershipVerdict membership_1d(const Trajectory<T>& traj, const T& p, const StayParams<T>& params) {
  require_1d(traj);
  const T q = p + params.side;
  const T limit = params.gap + comparison_slack(traj.duration());
  const auto vs = traj.vertices();

  bool violation_below = false;
  bool violation_above = false;
  bool outside = false;
  Side side = Side::Below;
  T excursion_start{};

  auto side_of = [&](const T& x) { return x < p ? Side::Below : Side::Above; };
  auto close = [&](const T& t) {
    if (t - excursion_start > limit) {
      (side == Side::Below ? violation_below : violation_above) = true;
    }
    outside = false;
  };

  const T& x0 = vs.front().pos.x;
  if (x0 < p || q < x0) {
    outside = true;
    side = side_of(x0);
    excursion_start = vs.front().t;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto& u = vs[i];
    const auto& v = vs[i + 1];
    auto inside = interval_entry_exit(u, v, p, params.side);
    if (!inside) continue;  // the running excursion (same side) spans the whole edge
    if (outside) close(inside->begin);
    if (inside->end < v.t) {
      outside = true;
      side = side_of(v.pos.x);
      excursion_start = inside->end;
    }
  }
  if (outside) close(vs.back().t);

  if (violation_below && violation_above) return MembershipVerdict::MapIsEmpty;
  // Spending too long left of p rules out every interval starting at or right
  // of p; spending too long right of p + s rules out every one starting at or
  // left of p.
  if (violation_below) return MembershipVerdict::MapIsLeft;
  if (violation_above) return MembershipVerdict::MapIsRight;
  return MembershipVerdict::Inside;
}

template <class T>
std::vector<EventPoint<T>> event_points(const Trajectory<T>& traj, const T& gap) {
  require_1d(traj);
  if (traj.size() < 2) throw std::invalid_argument("event_points needs at least two vertices");
  const auto vs = traj.vertices();
  const int edges = static_cast<int>(traj.edge_count());

  // In the time-location plane every edge that is not stationary is a line
  // t = slope * y + offset over its position range. Keys -1 and `edges` are
  // sentinels standing for the trajectory's start and end times.
  struct Line {
    T slope;
    T offset;
    T top;  // highest level the edge reaches; unused for sentinels
  };
  std::vector<Line> lines(static_cast<std::size_t>(edges) + 2);
  auto line = [&](int key) -> Line& { return lines[static_cast<std::size_t>(key + 1)]; };
  line(-1) = {T(0), vs.front().t, T{}};
  line(edges) = {T(0), vs.back().t, T{}};

  std::vector<T> levels;
  levels.reserve(vs.size());
  for (const auto& v : vs) levels.push_back(v.pos.x);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  auto level_index = [&](const T& y) {
    return static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), y) -
                                    levels.begin());
  };

  // Edges grouped by the level where they enter and leave the sweep, stored
  // as offsets into flat arrays.
  std::vector<std::size_t> open_level(static_cast<std::size_t>(edges));
  std::vector<std::size_t> close_level(static_cast<std::size_t>(edges));
  std::vector<std::size_t> open_start(levels.size() + 1, 0);
  std::vector<std::size_t> close_start(levels.size() + 1, 0);
  std::vector<char> moving(static_cast<std::size_t>(edges), 0);
  for (int e = 0; e < edges; ++e) {
    const auto k = static_cast<std::size_t>(e);
    const auto& u = vs[k];
    const auto& v = vs[k + 1];
    if (u.pos.x == v.pos.x) continue;  // stationary: never crosses an open slab
    const T slope = (v.t - u.t) / (v.pos.x - u.pos.x);
    const bool rising = u.pos.x < v.pos.x;
    line(e) = {slope, u.t - slope * u.pos.x, rising ? v.pos.x : u.pos.x};
    moving[k] = 1;
    open_level[k] = level_index(rising ? u.pos.x : v.pos.x);
    close_level[k] = level_index(rising ? v.pos.x : u.pos.x);
    ++open_start[open_level[k] + 1];
    ++close_start[close_level[k] + 1];
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    open_start[i + 1] += open_start[i];
    close_start[i + 1] += close_start[i];
  }
  std::vector<int> opens(open_start.back());
  std::vector<int> closes(close_start.back());
  {
    auto open_fill = open_start;
    auto close_fill = close_start;
    for (int e = 0; e < edges; ++e) {
      const auto k = static_cast<std::size_t>(e);
      if (!moving[k]) continue;
      opens[open_fill[open_level[k]]++] = e;
      closes[close_fill[close_level[k]]++] = e;
    }
  }

  // Pending "width reaches g" events, swept in y order between vertex
  // levels. An event is stale once the successor of its left key has changed
  // (generation mismatch).
  struct Pending {
    T y;
    std::size_t slot;  // left key + 1
    std::size_t generation;
  };
  auto later = [](const Pending& a, const Pending& b) { return b.y < a.y; };
  std::priority_queue<Pending, std::vector<Pending>, decltype(later)> queue(later);

  std::vector<std::size_t> generation(static_cast<std::size_t>(edges) + 2, 0);
  std::set<int> active{-1, edges};
  T current = levels.front();

  auto schedule = [&](int left, int right) {
    const Line& a = line(left);
    const Line& b = line(right);
    const T rate = b.slope - a.slope;
    if (rate == 0) return;  // constant width over the adjacency's lifetime
    T y = (gap - (b.offset - a.offset)) / rate;
    if (!(current < y)) return;
    // The adjacency cannot outlive either edge.
    if (left >= 0 && a.top < y) return;
    if (right < edges && b.top < y) return;
    const auto slot = static_cast<std::size_t>(left + 1);
    queue.push({std::move(y), slot, generation[slot]});
  };
  auto bump = [&](int key) { ++generation[static_cast<std::size_t>(key + 1)]; };

  std::vector<EventPoint<T>> out;
  out.reserve(vs.size() * 2);
  auto drain = [&](const T* upto) {
    // Gap events at a vertex level come before the level itself.
    while (!queue.empty() && (!upto || !(*upto < queue.top().y))) {
      const Pending& ev = queue.top();
      if (generation[ev.slot] == ev.generation) out.push_back({ev.y, EventKind::GapEqualsG});
      queue.pop();
    }
  };
  for (std::size_t li = 0; li < levels.size(); ++li) {
    drain(&levels[li]);
    current = levels[li];
    out.push_back({current, EventKind::Vertex});
    for (std::size_t c = close_start[li]; c < close_start[li + 1]; ++c) {
      const int e = closes[c];
      auto it = active.find(e);
      const int left = *std::prev(it);
      const int right = *std::next(it);
      active.erase(it);
      bump(left);
      bump(e);
      schedule(left, right);
    }
    for (std::size_t o = open_start[li]; o < open_start[li + 1]; ++o) {
      const int e = opens[o];
      auto it = active.insert(e).first;
      const int left = *std::prev(it);
      const int right = *std::next(it);
      bump(left);
      bump(e);
      schedule(left, e);
      schedule(e, right);
    }
  }
  drain(nullptr);
  return out;
}

template <class T>
std::vector<T> candidate_positions(std::span<const EventPoint<T>> events, const T& side) {
  std::vector<T> out;
  out.reserve(events.size() * 3);
  for (const auto& e : events) {
    out.push_back(e.position - side);
    out.push_back(e.position);
    out.push_back(e.position + side);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T>
Interval1D<T> staymap_1d(const Trajectory<T>& traj, const StayParams<T>& params,
                         Staymap1dStats* stats) {
  require_1d(traj);
  params.validate();
  Staymap1dStats local;
  Staymap1dStats& st = stats ? *stats : local;
  st = {};
  if (!(params.gap < traj.duration())) return Interval1D<T>::whole_line();

  const auto events = event_points(traj, params.gap);
  const auto cands = candidate_positions<T>(events, params.side);
  st.event_count = events.size();
  st.candidate_count = cands.size();
  auto probe = [&](std::size_t i) {
    ++st.membership_calls;
    return membership_1d(traj, cands[i], params);
  };

  // Locate any member; the map is one interval so directions are consistent.
  std::size_t lo = 0;
  std::size_t hi = cands.size();  // half-open
  std::size_t found = cands.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const auto verdict = probe(mid);
    if (verdict == MembershipVerdict::Inside) {
      found = mid;
      break;
    }
    if (verdict == MembershipVerdict::MapIsEmpty) return Interval1D<T>::empty();
    if (verdict == MembershipVerdict::MapIsLeft) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (found == cands.size()) return Interval1D<T>::empty();

  // Leftmost member in [lo, found]; everything before it reports MapIsRight.
  std::size_t a = lo;
  std::size_t b = found;
  while (a < b) {
    const std::size_t mid = a + (b - a) / 2;
    if (probe(mid) == MembershipVerdict::Inside) {
      b = mid;
    } else {
      a = mid + 1;
    }
  }
  const std::size_t left = a;

  // Rightmost member in [found, hi).
  a = found;
  b = hi - 1;
  while (a < b) {
    const std::size_t mid = a + (b - a + 1) / 2;
    if (probe(mid) == MembershipVerdict::Inside) {
      a = mid;
    } else {
      b = mid - 1;
    }
  }
  return Interval1D<T>::bounded(cands[left], cands[a]);
}

#define STAYMAP_INSTANTIATE(T)                                                                   \
  template MembershipVerdict membership_1d(const Trajectory<T>&, const T&, const StayParams<T>&); \
  template std::vector<EventPoint<T>> event_points(const Trajectory<T>&, const T&);              \
  template std::vector<T> candidate_positions(std::span<const EventPoint<T>>, const T&);         \
  template Interval1D<T> staymap_1d(const Trajectory<T>&, const StayParams<T>&, Staymap1dStats*);

STAYMAP_INSTANTIATE(double)
STAYMAP_INSTANTIATE(Rational)
#undef STAYMAP_INSTANTIATE

}  // namespace staymap

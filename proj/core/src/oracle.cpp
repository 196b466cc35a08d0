#include "staymap/oracle.hpp"

#include <stdexcept>

namespace staymap {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Exact: return "exact";
    case Classification::ApproxOnly: return "approx_only";
    case Classification::Outside: return "outside";
  }
  return "?";
}

namespace {

template <class T>
std::optional<TimeInterval<T>> clip(const Trajectory<T>& traj, const Vertex<T>& u,
                                    const Vertex<T>& v, const Vec2<T>& corner, const T& side) {
  if (traj.dimension() == 1) return interval_entry_exit(u, v, corner.x, side);
  return square_entry_exit(u, v, Square<T>{corner}, side);
}

}  // namespace

template <class T>
std::vector<TimeInterval<T>> presence_intervals(const Trajectory<T>& traj, const Vec2<T>& corner,
                                                const T& side) {
  std::vector<TimeInterval<T>> out;
  const auto vs = traj.vertices();
  if (vs.size() == 1) {
    if (auto hit = clip(traj, vs.front(), vs.front(), corner, side)) out.push_back(*hit);
    return out;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    auto hit = clip(traj, vs[i], vs[i + 1], corner, side);
    if (!hit) continue;
    // Edges are visited in time order, so merging only looks at the tail.
    if (!out.empty() && !(out.back().end < hit->begin)) {
      if (out.back().end < hit->end) out.back().end = hit->end;
    } else {
      out.push_back(*hit);
    }
  }
  return out;
}

template <class T>
std::vector<TimeInterval<T>> absence_intervals(const Trajectory<T>& traj, const Vec2<T>& corner,
                                               const T& side) {
  const auto presence = presence_intervals(traj, corner, side);
  std::vector<TimeInterval<T>> out;
  T cursor = traj.front().t;
  for (const auto& p : presence) {
    if (cursor < p.begin) out.push_back({cursor, p.begin});
    cursor = p.end;
  }
  if (cursor < traj.back().t) out.push_back({cursor, traj.back().t});
  return out;
}

template <class T>
GapReport<T> max_gap(const Trajectory<T>& traj, const Vec2<T>& corner, const T& side) {
  const auto absences = absence_intervals(traj, corner, side);
  GapReport<T> best{T(0), {traj.front().t, traj.front().t}};
  for (const auto& a : absences) {
    const T len = a.length();
    if (best.max_gap < len) best = {len, a};
  }
  return best;
}

template <class T>
Classification classify(const T& gap, const StayParams<T>& params) {
  if (!(params.gap < gap)) return Classification::Exact;
  if (!(params.gap * (1 + params.epsilon) < gap)) return Classification::ApproxOnly;
  return Classification::Outside;
}

template <class T>
Classification oracle_classify(const Trajectory<T>& traj, const Vec2<T>& corner,
                               const StayParams<T>& params) {
  return classify(max_gap(traj, corner, params.side).max_gap, params);
}

template <class T>
Vec2<T> GridScan<T>::point(std::size_t i, std::size_t j) const {
  return {spec.min.x + spec.step * T(static_cast<long>(i)),
          spec.min.y + spec.step * T(static_cast<long>(j))};
}

template <class T>
std::size_t GridScan<T>::count(Classification c) const {
  std::size_t n = 0;
  for (auto k : classes) n += k == c ? 1 : 0;
  return n;
}

template <class T>
GridScan<T> grid_scan(const Trajectory<T>& traj, const GridSpec<T>& spec,
                      const StayParams<T>& params) {
  if (!(spec.step > 0)) throw std::invalid_argument("grid step must be positive");
  if (spec.max.x < spec.min.x || (traj.dimension() == 2 && spec.max.y < spec.min.y)) {
    throw std::invalid_argument("grid box is inverted");
  }
  GridScan<T> scan;
  scan.spec = spec;
  auto steps = [&](const T& lo, const T& hi) {
    std::size_t n = 1;
    while (!(hi < lo + spec.step * T(static_cast<long>(n)))) ++n;
    return n;
  };
  scan.nx = steps(spec.min.x, spec.max.x);
  scan.ny = traj.dimension() == 1 ? 1 : steps(spec.min.y, spec.max.y);
  scan.gaps.reserve(scan.nx * scan.ny);
  scan.classes.reserve(scan.nx * scan.ny);
  for (std::size_t j = 0; j < scan.ny; ++j) {
    for (std::size_t i = 0; i < scan.nx; ++i) {
      auto report = max_gap(traj, scan.point(i, j), params.side);
      scan.classes.push_back(classify(report.max_gap, params));
      scan.gaps.push_back(std::move(report.max_gap));
    }
  }
  return scan;
}

template <class T>
std::size_t count_clusters(const GridScan<T>& scan, Classification c) {
  std::vector<char> seen(scan.classes.size(), 0);
  std::vector<std::size_t> stack;
  std::size_t clusters = 0;
  for (std::size_t start = 0; start < scan.classes.size(); ++start) {
    if (seen[start] || scan.classes[start] != c) continue;
    ++clusters;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t k = stack.back();
      stack.pop_back();
      const long i = static_cast<long>(k % scan.nx);
      const long j = static_cast<long>(k / scan.nx);
      for (long dj = -1; dj <= 1; ++dj) {
        for (long di = -1; di <= 1; ++di) {
          const long ni = i + di;
          const long nj = j + dj;
          if (ni < 0 || nj < 0 || ni >= static_cast<long>(scan.nx) ||
              nj >= static_cast<long>(scan.ny)) {
            continue;
          }
          const auto nk = static_cast<std::size_t>(nj) * scan.nx + static_cast<std::size_t>(ni);
          if (!seen[nk] && scan.classes[nk] == c) {
            seen[nk] = 1;
            stack.push_back(nk);
          }
        }
      }
    }
  }
  return clusters;
}

#define STAYMAP_INSTANTIATE(T)                                                                    \
  template std::vector<TimeInterval<T>> presence_intervals(const Trajectory<T>&, const Vec2<T>&,  \
                                                           const T&);                             \
  template std::vector<TimeInterval<T>> absence_intervals(const Trajectory<T>&, const Vec2<T>&,   \
                                                          const T&);                              \
  template GapReport<T> max_gap(const Trajectory<T>&, const Vec2<T>&, const T&);                  \
  template Classification classify(const T&, const StayParams<T>&);                               \
  template Classification oracle_classify(const Trajectory<T>&, const Vec2<T>&,                   \
                                          const StayParams<T>&);                                  \
  template struct GridScan<T>;                                                                    \
  template GridScan<T> grid_scan(const Trajectory<T>&, const GridSpec<T>&, const StayParams<T>&); \
  template std::size_t count_clusters(const GridScan<T>&, Classification);

STAYMAP_INSTANTIATE(double)
STAYMAP_INSTANTIATE(Rational)
#undef STAYMAP_INSTANTIATE

}  // namespace staymap

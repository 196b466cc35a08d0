#include "staymap/staymap2d.hpp"

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace bg = boost::geometry;

namespace staymap {

namespace {

using BPoint = bg::model::d2::point_xy<Rational>;
using BPolygon = bg::model::polygon<BPoint, /*ClockWise=*/false, /*Closed=*/true>;
using BMulti = bg::model::multi_polygon<BPolygon>;

using DPoint = bg::model::d2::point_xy<double>;
using DPolygon = bg::model::polygon<DPoint, false, true>;
using DMulti = bg::model::multi_polygon<DPolygon>;

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational signed_area2(const std::vector<Point>& ring) {
  Rational sum(0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % ring.size()];
    sum += a.x * b.y - b.x * a.y;
  }
  return sum;
}

// Drops repeated vertices and vertices lying strictly inside the segment
// between their neighbours.
std::vector<Point> simplify_ring(std::vector<Point> pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    std::vector<Point> kept;
    kept.reserve(pts.size());
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = kept.empty() ? pts[(i + n - 1) % n] : kept.back();
      const Point& cur = pts[i];
      const Point& next = pts[(i + 1) % n];
      if (cur == prev) {
        changed = true;
        continue;
      }
      if (cross(prev, cur, next) == 0) {
        const Rational dot = (cur.x - prev.x) * (next.x - cur.x) + (cur.y - prev.y) * (next.y - cur.y);
        if (dot > 0) {
          changed = true;
          continue;
        }
      }
      kept.push_back(cur);
    }
    pts = std::move(kept);
  }
  return pts;
}

void append_ring(const std::vector<Point>& ring, std::vector<BPoint>& out) {
  out.clear();
  out.reserve(ring.size() + 1);
  for (const auto& p : ring) out.emplace_back(p.x, p.y);
  if (!ring.empty()) out.emplace_back(ring.front().x, ring.front().y);
}

std::vector<Point> from_bring(const bg::model::ring<BPoint, false, true>& r) {
  std::vector<Point> pts;
  pts.reserve(r.size());
  for (const auto& p : r) pts.push_back({p.x(), p.y()});
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  return simplify_ring(std::move(pts));
}

BMulti to_boost(const RegionSet& region) {
  BMulti out;
  out.reserve(region.polygons().size());
  for (const auto& poly : region.polygons()) {
    BPolygon bp;
    std::vector<BPoint> pts;
    append_ring(poly.outer.vertices, pts);
    bp.outer().assign(pts.begin(), pts.end());
    for (const auto& hole : poly.holes) {
      append_ring(hole.vertices, pts);
      bp.inners().emplace_back(pts.begin(), pts.end());
    }
    out.push_back(std::move(bp));
  }
  return out;
}

RegionSet from_boost(const BMulti& multi) {
  std::vector<Polygon> polys;
  for (const auto& bp : multi) {
    Polygon poly;
    poly.outer.vertices = from_bring(bp.outer());
    if (poly.outer.vertices.size() < 3 || signed_area2(poly.outer.vertices) <= 0) continue;
    for (const auto& inner : bp.inners()) {
      auto hole = from_bring(inner);
      if (hole.size() >= 3 && signed_area2(hole) < 0) poly.holes.push_back({std::move(hole)});
    }
    polys.push_back(std::move(poly));
  }
  return RegionSet(std::move(polys));
}

DMulti to_double_boost(const RegionSet& region) {
  DMulti out;
  for (const auto& poly : region.polygons()) {
    DPolygon dp;
    auto fill = [](const Ring& r, auto& target) {
      for (const auto& p : r.vertices) target.emplace_back(to_double(p.x), to_double(p.y));
      if (!r.vertices.empty()) {
        target.emplace_back(to_double(r.vertices.front().x), to_double(r.vertices.front().y));
      }
    };
    fill(poly.outer, dp.outer());
    for (const auto& hole : poly.holes) {
      dp.inners().emplace_back();
      fill(hole, dp.inners().back());
    }
    out.push_back(std::move(dp));
  }
  return out;
}

BMulti unite_range(std::span<const BMulti> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  BMulti a = unite_range(parts.first(half));
  BMulti b = unite_range(parts.subspan(half));
  BMulti out;
  bg::union_(a, b, out);
  return out;
}

// `parts` never contains the whole-plane marker here.
BMulti intersect_range(std::span<const BMulti> parts) {
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  BMulti a = intersect_range(parts.first(half));
  if (a.empty()) return a;
  BMulti b = intersect_range(parts.subspan(half));
  if (b.empty()) return b;
  BMulti out;
  bg::intersection(a, b, out);
  // Re-read through RegionSet to drop degenerate faces and collinear vertices.
  return to_boost(from_boost(out));
}

}  // namespace

std::size_t RegionSet::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& p : polygons_) {
    n += p.outer.vertices.size();
    for (const auto& h : p.holes) n += h.vertices.size();
  }
  return n;
}

ConvexPolygon<Rational> edge_visit_region(const Vertex<Rational>& u, const Vertex<Rational>& v,
                                          const Rational& side) {
  std::vector<Point> pts;
  pts.reserve(8);
  for (const auto* end : {&u.pos, &v.pos}) {
    pts.push_back({end->x - side, end->y - side});
    pts.push_back({end->x, end->y - side});
    pts.push_back({end->x, end->y});
    pts.push_back({end->x - side, end->y});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Monotone chain, strictly convex output.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  auto start = std::min_element(hull.begin(), hull.end(), [](const Point& a, const Point& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(hull.begin(), start, hull.end());
  return {std::move(hull)};
}

Snapshot snapshot(const Trajectory<Rational>& traj, const Rational& t,
                  const StayParams<Rational>& params) {
  if (traj.dimension() != 2) throw std::invalid_argument("snapshot needs a 2D trajectory");
  params.validate();
  const Rational end = std::min<Rational>(t + params.gap, traj.back().t);
  const auto sub = subtrajectory(traj, t, end);
  const auto vs = sub.vertices();

  std::vector<BMulti> parts;
  auto add = [&](const Vertex<Rational>& a, const Vertex<Rational>& b) {
    const auto hull = edge_visit_region(a, b, params.side);
    BPolygon bp;
    std::vector<BPoint> pts;
    append_ring(hull.vertices, pts);
    bp.outer().assign(pts.begin(), pts.end());
    parts.push_back(BMulti{std::move(bp)});
  };
  if (vs.size() == 1) add(vs.front(), vs.front());
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    // A stationary edge right after a stationary edge at the same spot adds nothing.
    if (i > 0 && vs[i].pos == vs[i + 1].pos && vs[i - 1].pos == vs[i].pos) continue;
    add(vs[i], vs[i + 1]);
  }
  return {t, from_boost(unite_range(parts)), vs.size()};
}

std::vector<Rational> snapshot_times(const Rational& duration, const StayParams<Rational>& params) {
  params.validate();
  if (!(params.gap < duration)) {
    throw std::invalid_argument("snapshot_times: trajectory duration does not exceed the gap");
  }
  if (!(params.epsilon > 0) || params.gap * params.epsilon > duration) {
    throw std::invalid_argument("snapshot_times: epsilon must be in (0, D / g]");
  }
  const Rational step = params.epsilon * params.gap;
  const Rational last_start = duration - params.gap;
  const Rational count = floor(last_start / step);
  std::vector<Rational> out;
  for (Rational i(0); i <= count; i += 1) out.push_back(i * step);
  if (out.back() != last_start) out.push_back(last_start);
  return out;
}

RegionSet unite_regions(std::span<const RegionSet> regions) {
  std::vector<BMulti> parts;
  for (const auto& r : regions) {
    if (r.is_whole_plane()) return RegionSet::whole_plane();
    parts.push_back(to_boost(r));
  }
  return from_boost(unite_range(parts));
}

RegionSet intersect_regions(std::span<const RegionSet> regions) {
  if (regions.empty()) throw std::invalid_argument("intersect_regions needs at least one region");
  std::vector<BMulti> parts;
  for (const auto& r : regions) {
    if (r.is_whole_plane()) continue;
    if (r.is_empty()) return RegionSet();
    parts.push_back(to_boost(r));
  }
  if (parts.empty()) return RegionSet::whole_plane();
  return from_boost(intersect_range(parts));
}

ApproxStats approx_staymap_stats(const Trajectory<Rational>& traj,
                                 const StayParams<Rational>& params, RegionSet& out) {
  if (traj.dimension() != 2) throw std::invalid_argument("approx_staymap needs a 2D trajectory");
  params.validate();
  ApproxStats stats;
  const Rational duration = traj.duration();
  if (!(params.gap < duration)) {
    out = RegionSet::whole_plane();
    return stats;
  }
  const auto times = snapshot_times(duration, params);
  std::vector<RegionSet> snaps;
  snaps.reserve(times.size());
  for (const auto& offset : times) {
    auto snap = snapshot(traj, traj.front().t + offset, params);
    stats.snapshot_vertex_total += snap.vertex_count;
    snaps.push_back(std::move(snap.region));
  }
  stats.snapshot_count = snaps.size();
  out = intersect_regions(snaps);
  stats.output_polygons = out.polygons().size();
  stats.output_vertices = out.vertex_count();
  return stats;
}

RegionSet approx_staymap(const Trajectory<Rational>& traj, const StayParams<Rational>& params) {
  RegionSet out;
  approx_staymap_stats(traj, params, out);
  return out;
}

bool covers(const RegionSet& region, const Point& p) {
  if (region.is_whole_plane()) return true;
  const BPoint bp(p.x, p.y);
  for (const auto& poly : to_boost(region)) {
    if (bg::covered_by(bp, poly)) return true;
  }
  return false;
}

double distance_to(const RegionSet& region, const Vec2<double>& p) {
  if (region.is_whole_plane()) return 0.0;
  if (region.is_empty()) return std::numeric_limits<double>::infinity();
  return bg::distance(DPoint(p.x, p.y), to_double_boost(region));
}

std::pair<Vec2<double>, Vec2<double>> bounding_box(const RegionSet& region) {
  if (region.polygons().empty()) return {};
  Vec2<double> lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Vec2<double> hi{-lo.x, -lo.y};
  for (const auto& poly : region.polygons()) {
    for (const auto& p : poly.outer.vertices) {
      lo.x = std::min(lo.x, to_double(p.x));
      lo.y = std::min(lo.y, to_double(p.y));
      hi.x = std::max(hi.x, to_double(p.x));
      hi.y = std::max(hi.y, to_double(p.y));
    }
  }
  return {lo, hi};
}

ValidationReport validate(const RegionSet& region) {
  ValidationReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.problems.push_back(std::move(msg));
  };
  if (region.is_whole_plane()) return report;
  std::size_t index = 0;
  for (const auto& poly : region.polygons()) {
    const std::string tag = "polygon " + std::to_string(index++);
    if (poly.outer.vertices.size() < 3) fail(tag + ": outer ring has fewer than 3 vertices");
    if (signed_area2(poly.outer.vertices) <= 0) fail(tag + ": outer ring is not counterclockwise");
    for (const auto& hole : poly.holes) {
      if (signed_area2(hole.vertices) >= 0) fail(tag + ": hole is not clockwise");
    }
  }
  std::string reason;
  if (!bg::is_valid(to_boost(region), reason)) fail(reason);
  return report;
}

}  // namespace staymap

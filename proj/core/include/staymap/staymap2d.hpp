#pragma once

// (1 + epsilon)-approximate stay map of a 2D trajectory.
//
// A snapshot P(t, t + g) is the set of lower-left corners whose square touches
// the sub-trajectory T(t, t + g). Every exact stay point survives every
// snapshot, and a corner that survives snapshots taken every epsilon * g time
// units is never left for more than (1 + epsilon) * g. The approximate map is
// the intersection of those snapshots.
//
// All 2D geometry here is exact (Rational coordinates).

#include "staymap/geom_core.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace staymap {

using Point = Vec2<Rational>;

/// Closed polygonal chain without the repeated closing vertex.
struct Ring {
  std::vector<Point> vertices;
};

/// Outer ring counterclockwise, holes clockwise.
struct Polygon {
  Ring outer;
  std::vector<Ring> holes;
};

/// Closed point set made of pairwise interior-disjoint polygons, or the whole
/// plane. Only two-dimensional faces are represented.
class RegionSet {
 public:
  RegionSet() = default;
  explicit RegionSet(std::vector<Polygon> polygons) : polygons_(std::move(polygons)) {}

  static RegionSet whole_plane() {
    RegionSet r;
    r.whole_plane_ = true;
    return r;
  }

  bool is_whole_plane() const noexcept { return whole_plane_; }
  bool is_empty() const noexcept { return !whole_plane_ && polygons_.empty(); }
  std::span<const Polygon> polygons() const noexcept { return polygons_; }
  std::size_t vertex_count() const noexcept;

 private:
  bool whole_plane_ = false;
  std::vector<Polygon> polygons_;
};

struct Snapshot {
  Rational t_start;
  RegionSet region;
  std::size_t vertex_count = 0;  ///< vertices of the sub-trajectory it was built from
};

/// Corners p whose closed square [p, p + s]^2 touches segment uv: the
/// Minkowski sum of uv with [-s, 0]^2. Counterclockwise starting from the
/// lowest (then leftmost) vertex; 4 vertices for axis-parallel or zero-length
/// edges, 6 otherwise.
ConvexPolygon<Rational> edge_visit_region(const Vertex<Rational>& u, const Vertex<Rational>& v,
                                          const Rational& side);

/// Union of the visit regions of every edge of T(t, min(t + g, last.t)).
/// Throws std::out_of_range when t is outside the trajectory.
Snapshot snapshot(const Trajectory<Rational>& traj, const Rational& t,
                  const StayParams<Rational>& params);

/// Snapshot start offsets from the trajectory start: i * epsilon * g for
/// i = 0 .. floor((D - g) / (epsilon * g)) plus the clamped final start D - g.
/// Throws std::invalid_argument when D <= g or epsilon is not in (0, D / g].
std::vector<Rational> snapshot_times(const Rational& duration, const StayParams<Rational>& params);

RegionSet unite_regions(std::span<const RegionSet> regions);

/// Point set intersection, computed pairwise in a balanced tree order.
/// Throws std::invalid_argument on an empty list.
RegionSet intersect_regions(std::span<const RegionSet> regions);

struct ApproxStats {
  std::size_t snapshot_count = 0;
  std::size_t snapshot_vertex_total = 0;  ///< summed over snapshot sub-trajectories
  std::size_t output_polygons = 0;
  std::size_t output_vertices = 0;
};

/// Whole plane when D <= g; otherwise the intersection of all snapshots.
ApproxStats approx_staymap_stats(const Trajectory<Rational>& traj,
                                 const StayParams<Rational>& params, RegionSet& out);
RegionSet approx_staymap(const Trajectory<Rational>& traj, const StayParams<Rational>& params);

/// Closed point membership.
bool covers(const RegionSet& region, const Point& p);

/// Euclidean distance from p to the region (0 inside), in double precision.
double distance_to(const RegionSet& region, const Vec2<double>& p);

/// Axis-aligned bounding box as {min, max}; both zero for an empty region.
std::pair<Vec2<double>, Vec2<double>> bounding_box(const RegionSet& region);

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
};

/// Checks ring simplicity, orientation (outer CCW, holes CW), positive area
/// and pairwise interior-disjointness.
ValidationReport validate(const RegionSet& region);

}  // namespace staymap

#include "staymap/staymap2d.hpp"
#include "staymap/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace staymap {
namespace {

using test::params;
using test::plane;
using test::R;

using Pts = std::vector<Point>;

Pts vertices(const ConvexPolygon<Rational>& p) { return p.vertices; }

RegionSet box(const char* x0, const char* y0, const char* x1, const char* y1) {
  Ring r{{{R(x0), R(y0)}, {R(x1), R(y0)}, {R(x1), R(y1)}, {R(x0), R(y1)}}};
  return RegionSet({Polygon{r, {}}});
}

Rational area(const Ring& r) {
  Rational a = 0;
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const auto& p = r.vertices[i];
    const auto& q = r.vertices[(i + 1) % r.vertices.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return a / 2;
}

Rational area(const RegionSet& region) {
  Rational a = 0;
  for (const auto& poly : region.polygons()) {
    a += area(poly.outer);
    for (const auto& h : poly.holes) a += area(h);
  }
  return a;
}

TEST(EdgeVisitRegion, Examples) {
  using V = Vertex<Rational>;
  EXPECT_EQ(vertices(edge_visit_region(V{0, {0, 0}}, V{1, {2, 0}}, Rational(1))),
            (Pts{{-1, -1}, {2, -1}, {2, 0}, {-1, 0}}));
  EXPECT_EQ(vertices(edge_visit_region(V{0, {0, 0}}, V{1, {0, 0}}, Rational(1))),
            (Pts{{-1, -1}, {0, -1}, {0, 0}, {-1, 0}}));
  EXPECT_EQ(vertices(edge_visit_region(V{0, {0, 0}}, V{1, {1, 1}}, Rational(1))),
            (Pts{{-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}}));
}

TEST(EdgeVisitRegion, DirectionDoesNotMatter) {
  using V = Vertex<Rational>;
  const auto a = edge_visit_region(V{0, {0, 0}}, V{1, {3, -1}}, Rational(2));
  const auto b = edge_visit_region(V{0, {3, -1}}, V{1, {0, 0}}, Rational(2));
  EXPECT_EQ(a.vertices, b.vertices);
  EXPECT_EQ(a.vertices.size(), 6u);
}

TEST(Snapshot, Stationary) {
  const auto t = plane({{"0", "0", "0"}, {"5", "0", "0"}, {"10", "0", "0"}});
  const auto s = snapshot(t, R("3"), params("1", "2"));
  EXPECT_EQ(s.t_start, R("3"));
  ASSERT_EQ(s.region.polygons().size(), 1u);
  EXPECT_EQ(area(s.region), Rational(1));
  EXPECT_TRUE(covers(s.region, {-1, -1}));
  EXPECT_TRUE(covers(s.region, {0, 0}));
  EXPECT_FALSE(covers(s.region, {R("0.01"), 0}));
}

TEST(Snapshot, SingleEdgeIsItsVisitRegion) {
  const auto t = plane({{"0", "0", "0"}, {"2", "2", "0"}});
  const auto s = snapshot(t, R("0"), params("1", "2"));
  ASSERT_EQ(s.region.polygons().size(), 1u);
  EXPECT_EQ(area(s.region), Rational(3));
  EXPECT_EQ(bounding_box(s.region), (std::pair<Vec2<double>, Vec2<double>>{{-1, -1}, {2, 0}}));
}

TEST(Snapshot, LShape) {
  const auto t = plane({{"0", "0", "0"}, {"1", "2", "0"}, {"2", "2", "2"}});
  const auto s = snapshot(t, R("0"), params("1", "2"));
  ASSERT_EQ(s.region.polygons().size(), 1u);
  // Corners of squares touching x = 2 have x in [1, 2], so the L ends at x = 2.
  EXPECT_EQ(bounding_box(s.region), (std::pair<Vec2<double>, Vec2<double>>{{-1, -1}, {2, 2}}));
  // A 3x1 and a 1x3 rectangle overlapping in a unit square.
  EXPECT_EQ(area(s.region), Rational(5));
  // Sample against the per-edge square test.
  for (int i = -6; i <= 14; ++i) {
    for (int j = -6; j <= 10; ++j) {
      const Point p{Rational(i, 4), Rational(j, 4)};
      bool hit = false;
      for (std::size_t e = 0; e + 1 < t.size(); ++e) {
        hit = hit || square_entry_exit(t[e], t[e + 1], Square<Rational>{p}, Rational(1)).has_value();
      }
      EXPECT_EQ(covers(s.region, p), hit) << i << "," << j;
    }
  }
  EXPECT_TRUE(validate(s.region).valid);
}

TEST(Snapshot, OutOfRangeThrows) {
  const auto t = plane({{"0", "0", "0"}, {"2", "2", "0"}});
  EXPECT_THROW(snapshot(t, R("3"), params("1", "1")), std::out_of_range);
}

TEST(SnapshotTimes, Examples) {
  const auto eight = snapshot_times(Rational(10), params("1", "2", "0.5"));
  std::vector<Rational> want;
  for (int i = 0; i <= 8; ++i) want.push_back(i);
  EXPECT_EQ(eight, want);
  EXPECT_EQ(snapshot_times(Rational(10), params("1", "2", "4")), (std::vector<Rational>{0, 8}));
  // D = g + lambda
  EXPECT_EQ(snapshot_times(Rational(3), params("1", "2", "0.5")), (std::vector<Rational>{0, 1}));
  // A final start that does not fall on the lattice is appended.
  EXPECT_EQ(snapshot_times(Rational(10), params("1", "3", "1")),
            (std::vector<Rational>{0, 3, 6, 7}));
}

TEST(SnapshotTimes, Errors) {
  EXPECT_THROW(snapshot_times(Rational(2), params("1", "2", "0.5")), std::invalid_argument);
  EXPECT_THROW(snapshot_times(Rational(10), params("1", "2", "0")), std::invalid_argument);
  EXPECT_THROW(snapshot_times(Rational(10), params("1", "2", "5.5")), std::invalid_argument);
  EXPECT_NO_THROW(snapshot_times(Rational(10), params("1", "2", "5")));
}

TEST(IntersectRegions, Examples) {
  const auto a = box("0", "0", "1", "1");
  std::vector<RegionSet> one{a};
  EXPECT_EQ(area(intersect_regions(one)), Rational(1));

  std::vector<RegionSet> two{a, box("0.5", "0", "1.5", "1")};
  const auto strip = intersect_regions(two);
  ASSERT_EQ(strip.polygons().size(), 1u);
  EXPECT_EQ(area(strip), Rational(1, 2));
  EXPECT_EQ(bounding_box(strip), (std::pair<Vec2<double>, Vec2<double>>{{0.5, 0}, {1, 1}}));

  std::vector<RegionSet> apart{a, box("2", "2", "3", "3")};
  EXPECT_TRUE(intersect_regions(apart).is_empty());

  std::vector<RegionSet> none;
  EXPECT_THROW(intersect_regions(none), std::invalid_argument);
}

TEST(IntersectRegions, TangencyIsDropped) {
  std::vector<RegionSet> edge{box("0", "0", "1", "1"), box("1", "0", "2", "1")};
  EXPECT_TRUE(intersect_regions(edge).is_empty());
  std::vector<RegionSet> corner{box("0", "0", "1", "1"), box("1", "1", "2", "2")};
  EXPECT_TRUE(intersect_regions(corner).is_empty());
}

TEST(IntersectRegions, WholePlaneIsNeutral) {
  std::vector<RegionSet> rs{RegionSet::whole_plane(), box("0", "0", "2", "1")};
  EXPECT_EQ(area(intersect_regions(rs)), Rational(2));
  std::vector<RegionSet> all{RegionSet::whole_plane(), RegionSet::whole_plane()};
  EXPECT_TRUE(intersect_regions(all).is_whole_plane());
}

TEST(UniteRegions, MergesAndKeepsHoles) {
  // Four bars around a 1x1 hole.
  std::vector<RegionSet> bars{box("0", "0", "3", "1"), box("0", "2", "3", "3"), box("0", "0", "1", "3"),
                              box("2", "0", "3", "3")};
  const auto ring = unite_regions(bars);
  ASSERT_EQ(ring.polygons().size(), 1u);
  EXPECT_EQ(ring.polygons()[0].holes.size(), 1u);
  EXPECT_EQ(area(ring), Rational(8));
  EXPECT_FALSE(covers(ring, {R("1.5"), R("1.5")}));
  EXPECT_TRUE(covers(ring, {1, 1}));
  EXPECT_TRUE(validate(ring).valid);
}

TEST(ApproxStaymap, StationaryIsItsSquare) {
  const auto t = plane({{"0", "0", "0"}, {"10", "0", "0"}});
  const auto m = approx_staymap(t, params("1", "2", "0.5"));
  ASSERT_EQ(m.polygons().size(), 1u);
  EXPECT_EQ(area(m), Rational(1));
  EXPECT_EQ(bounding_box(m), (std::pair<Vec2<double>, Vec2<double>>{{-1, -1}, {0, 0}}));
}

TEST(ApproxStaymap, WholePlaneWhenShort) {
  const auto t = plane({{"0", "0", "0"}, {"2", "5", "5"}});
  EXPECT_TRUE(approx_staymap(t, params("1", "2", "0.5")).is_whole_plane());
  EXPECT_TRUE(approx_staymap(plane({{"1", "1", "1"}}), params("1", "2", "0.5")).is_whole_plane());
}

TEST(ApproxStaymap, LoopCoveredBySquare) {
  // Laps a 2x2 square every 4 time units; g = 5 exceeds a lap.
  const auto t = plane({{"0", "0", "0"}, {"1", "2", "0"}, {"2", "2", "2"}, {"3", "0", "2"}, {"4", "0", "0"},
                        {"5", "2", "0"}, {"6", "2", "2"}, {"7", "0", "2"}, {"8", "0", "0"},
                        {"9", "2", "0"}, {"10", "2", "2"}, {"11", "0", "2"}, {"12", "0", "0"}});
  const auto m = approx_staymap(t, params("3", "5", "0.5"));
  ASSERT_FALSE(m.is_empty());
  // Squares [p, p + 3]^2 with p in [-1, 0]^2 contain the whole loop.
  EXPECT_TRUE(covers(m, {R("-0.5"), R("-0.5")}));
  EXPECT_EQ(max_gap(t, Vec2<Rational>{R("-0.5"), R("-0.5")}, R("3")).max_gap, Rational(0));
  EXPECT_TRUE(validate(m).valid);
}

TEST(ApproxStaymap, LongAbsenceExcludesSquare) {
  // At the origin for 4, away for 6, back for 4: absence 6 > (1 + 0.5) * 2.
  const auto t = plane({{"0", "0", "0"}, {"4", "0", "0"}, {"5", "10", "0"}, {"9", "10", "0"},
                        {"10", "0", "0"}, {"14", "0", "0"}});
  const auto m = approx_staymap(t, params("1", "2", "0.5"));
  EXPECT_FALSE(covers(m, {R("-0.5"), R("-0.5")}));
  EXPECT_TRUE(m.is_empty());
}

TEST(ApproxStaymap, StatsCountSnapshots) {
  const auto t = plane({{"0", "0", "0"}, {"10", "1", "0"}});
  RegionSet out;
  const auto st = approx_staymap_stats(t, params("2", "2", "0.5"), out);
  EXPECT_EQ(st.snapshot_count, 9u);
  EXPECT_EQ(st.output_polygons, out.polygons().size());
  EXPECT_EQ(st.output_vertices, out.vertex_count());
  EXPECT_GE(st.snapshot_vertex_total, 2 * st.snapshot_count);
}

TEST(Region, DistanceAndValidation) {
  const auto a = box("0", "0", "1", "1");
  EXPECT_DOUBLE_EQ(distance_to(a, {0.5, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(distance_to(a, {2, 1}), 1.0);
  EXPECT_TRUE(validate(a).valid);

  Ring cw{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
  EXPECT_FALSE(validate(RegionSet({Polygon{cw, {}}})).valid);
  Ring bow{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
  EXPECT_FALSE(validate(RegionSet({Polygon{bow, {}}})).valid);
  Ring two{{{0, 0}, {1, 0}}};
  EXPECT_FALSE(validate(RegionSet({Polygon{two, {}}})).valid);
}

}  // namespace
}  // namespace staymap

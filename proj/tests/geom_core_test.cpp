#include "staymap/geom_core.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace staymap {
namespace {

using test::line;
using test::plane;
using test::R;

TEST(Number, ParsesDecimalsExactly) {
  EXPECT_EQ(*parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(*parse_rational("-12.5"), Rational(-25, 2));
  EXPECT_EQ(*parse_rational("2.5E+2"), Rational(250));
  EXPECT_EQ(*parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(*parse_rational("+3"), Rational(3));
  EXPECT_EQ(*parse_rational(".5"), Rational(1, 2));
  EXPECT_EQ(*parse_rational("5."), Rational(5));
}

TEST(Number, LeadingZerosAreDecimal) {
  EXPECT_EQ(*parse_rational("0.5625"), Rational(9, 16));
  EXPECT_EQ(*parse_rational("0.6875"), Rational(11, 16));
  EXPECT_EQ(*parse_rational("007"), Rational(7));
  EXPECT_EQ(*parse_rational("000"), Rational(0));
  EXPECT_EQ(*parse_rational("-0.0"), Rational(0));
}

TEST(Number, RejectsGarbage) {
  for (const char* bad : {"", "-", ".", "1e", "1e+", "abc", "1.2.3", "inf", "nan", "1 ", "0x10"}) {
    EXPECT_FALSE(parse_rational(bad).has_value()) << bad;
    EXPECT_FALSE(parse_double(bad).has_value()) << bad;
  }
}

TEST(Number, FormatsShortest) {
  EXPECT_EQ(format_number(Rational(0)), "0");
  EXPECT_EQ(format_number(Rational(-5, 4)), "-1.25");
  EXPECT_EQ(format_number(Rational(7)), "7");
  EXPECT_EQ(format_number(Rational(1, 1024)), "0.0009765625");
  EXPECT_EQ(format_number(Rational(1, 3)), "0.3333333333333333");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(-0.0), "0");
}

TEST(Number, FormatParseRoundTrip) {
  for (const char* s : {"0", "1.25", "-3.5", "0.0625", "1234567.875", "0.000001"}) {
    EXPECT_EQ(format_number(*parse_rational(s)), s);
  }
}

TEST(Number, Floor) {
  EXPECT_EQ(floor(Rational(7, 2)), Rational(3));
  EXPECT_EQ(floor(Rational(-7, 2)), Rational(-4));
  EXPECT_EQ(floor(Rational(-4)), Rational(-4));
}

TEST(Trajectory, RejectsInvalidInput) {
  using V = Vertex<Rational>;
  EXPECT_THROW(Trajectory<Rational>({}, 1), TrajectoryError);
  EXPECT_THROW(Trajectory<Rational>({V{0, {0, 0}}}, 3), TrajectoryError);
  EXPECT_THROW(Trajectory<Rational>({V{0, {0, 0}}, V{0, {1, 0}}}, 1), TrajectoryError);
  EXPECT_THROW(Trajectory<Rational>({V{1, {0, 0}}, V{0, {1, 0}}}, 2), TrajectoryError);
  EXPECT_THROW(Trajectory<Rational>({V{0, {0, 1}}}, 1), TrajectoryError);
  EXPECT_NO_THROW(Trajectory<Rational>({V{0, {0, 0}}}, 2));
}

TEST(Trajectory, DurationAndCast) {
  const auto t = test::tent();
  EXPECT_EQ(t.duration(), Rational(8));
  EXPECT_EQ(t.edge_count(), 2u);
  const auto d = trajectory_cast<double>(t);
  EXPECT_EQ(d.back().t, 8.0);
  EXPECT_EQ(trajectory_cast<Rational>(d), t);
}

TEST(PositionAt, Examples) {
  EXPECT_EQ(position_at(line({{"0", "0"}, {"8", "4"}}), R("4")).x, R("2"));
  const auto still = plane({{"0", "0", "0"}, {"10", "0", "0"}});
  EXPECT_EQ(position_at(still, R("3")), (Vec2<Rational>{0, 0}));
  const auto bent = plane({{"0", "0", "0"}, {"2", "4", "0"}, {"4", "4", "4"}});
  EXPECT_EQ(position_at(bent, R("3")), (Vec2<Rational>{4, 2}));
}

TEST(PositionAt, ExactAtVerticesAndThrowsOutside) {
  const auto bent = plane({{"0", "0", "0"}, {"2", "4", "0"}, {"4", "4", "4"}});
  for (const auto& v : bent.vertices()) EXPECT_EQ(position_at(bent, v.t), v.pos);
  EXPECT_THROW(position_at(bent, R("-0.5")), std::out_of_range);
  EXPECT_THROW(position_at(bent, R("4.01")), std::out_of_range);
}

TEST(Subtrajectory, Examples) {
  const auto a = subtrajectory(line({{"0", "0"}, {"8", "4"}}), R("2"), R("6"));
  EXPECT_EQ(a, line({{"2", "1"}, {"6", "3"}}));

  const auto bent = plane({{"0", "0", "0"}, {"4", "4", "0"}, {"8", "4", "4"}});
  EXPECT_EQ(subtrajectory(bent, R("0"), R("8")), bent);
  EXPECT_EQ(subtrajectory(bent, R("2"), R("6")),
            plane({{"2", "2", "0"}, {"4", "4", "0"}, {"6", "4", "2"}}));
}

TEST(Subtrajectory, DegenerateAndErrors) {
  const auto t = test::tent();
  const auto point = subtrajectory(t, R("4"), R("4"));
  EXPECT_EQ(point.size(), 1u);
  EXPECT_EQ(point.front().pos.x, R("4"));
  EXPECT_THROW(subtrajectory(t, R("5"), R("4")), std::out_of_range);
  EXPECT_THROW(subtrajectory(t, R("-1"), R("4")), std::out_of_range);
  EXPECT_THROW(subtrajectory(t, R("1"), R("9")), std::out_of_range);
}

TEST(Subtrajectory, Composes) {
  const auto bent = plane({{"0", "0", "0"}, {"1", "3", "1"}, {"2.5", "-1", "2"}, {"4", "0", "0"}});
  const auto outer = subtrajectory(bent, R("0.5"), R("3.5"));
  EXPECT_EQ(subtrajectory(outer, R("1"), R("3")), subtrajectory(bent, R("1"), R("3")));
  EXPECT_EQ(subtrajectory(outer, R("1"), R("2.5")), subtrajectory(bent, R("1"), R("2.5")));
}

TEST(SquareEntryExit, Examples) {
  using V = Vertex<Rational>;
  const auto hit = square_entry_exit(V{0, {-2, 0}}, V{4, {2, 0}}, Square<Rational>{{-1, -1}}, Rational(2));
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, (TimeInterval<Rational>{1, 3}));

  EXPECT_FALSE(square_entry_exit(V{0, {5, 5}}, V{1, {6, 9}}, Square<Rational>{{0, 0}}, Rational(1)));

  const auto tail = square_entry_exit(V{0, {0, 0}}, V{4, {4, 0}}, Square<Rational>{{3, 0}}, Rational(1));
  ASSERT_TRUE(tail);
  EXPECT_EQ(*tail, (TimeInterval<Rational>{3, 4}));
}

TEST(SquareEntryExit, BoundaryAndStationary) {
  using V = Vertex<Rational>;
  // Grazing the top edge counts as inside.
  const auto graze = square_entry_exit(V{0, {-1, 1}}, V{2, {3, 1}}, Square<Rational>{{0, 0}}, Rational(1));
  ASSERT_TRUE(graze);
  EXPECT_EQ(*graze, (TimeInterval<Rational>{Rational(1, 2), Rational(1)}));
  // Touching a corner gives a single instant.
  const auto corner = square_entry_exit(V{0, {-1, 0}}, V{2, {1, 2}}, Square<Rational>{{0, 0}}, Rational(1));
  ASSERT_TRUE(corner);
  EXPECT_EQ(*corner, (TimeInterval<Rational>{1, 1}));
  const auto still = square_entry_exit(V{0, {0, 0}}, V{5, {0, 0}}, Square<Rational>{{-1, -1}}, Rational(1));
  ASSERT_TRUE(still);
  EXPECT_EQ(*still, (TimeInterval<Rational>{0, 5}));
  EXPECT_FALSE(square_entry_exit(V{0, {2, 0}}, V{5, {2, 0}}, Square<Rational>{{-1, -1}}, Rational(1)));
}

TEST(IntervalEntryExit, Clips) {
  using V = Vertex<Rational>;
  const auto down = interval_entry_exit(V{4, {4, 0}}, V{8, {0, 0}}, Rational(1), Rational(1));
  ASSERT_TRUE(down);
  EXPECT_EQ(*down, (TimeInterval<Rational>{6, 7}));
  EXPECT_FALSE(interval_entry_exit(V{0, {0, 0}}, V{1, {1, 0}}, Rational(2), Rational(1)));
}

TEST(StayParams, Validation) {
  EXPECT_THROW((StayParams<Rational>{0, 1, 0}.validate()), std::invalid_argument);
  EXPECT_THROW((StayParams<Rational>{1, -1, 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((StayParams<double>{1, 1, 0}.validate()));
}

}  // namespace
}  // namespace staymap

#include "normdyn/interval_set.hpp"

#include <gtest/gtest.h>

namespace normdyn {
namespace {

TEST(Interval, EmptinessAndMembership) {
  EXPECT_TRUE((Interval{0.4, 0.4, true, false}).empty());
  EXPECT_FALSE((Interval{0.4, 0.4, true, true}).empty());
  EXPECT_TRUE((Interval{0.6, 0.4}).empty());
  const Interval half_open{0.2, 0.5, false, true};
  EXPECT_FALSE(half_open.contains(0.2));
  EXPECT_TRUE(half_open.contains(0.5));
  EXPECT_DOUBLE_EQ(half_open.length(), 0.3);
}

TEST(IntervalSet, AddClipsAndMerges) {
  IntervalSet s;
  s.add({-0.5, 0.2, true, true});
  s.add({0.6, 1.7, true, true});
  s.add({0.2, 0.3, false, false});
  ASSERT_EQ(s.intervals().size(), 2u);
  EXPECT_EQ(s.intervals()[0], (Interval{0.0, 0.3, true, false}));
  EXPECT_EQ(s.intervals()[1], (Interval{0.6, 1.0, true, true}));
  EXPECT_DOUBLE_EQ(s.length(), 0.7);
}

TEST(IntervalSet, OpenTouchingEndpointsStaySeparate) {
  IntervalSet s({0.0, 0.5, true, false});
  s.add({0.5, 1.0, false, true});
  EXPECT_EQ(s.intervals().size(), 2u);
  EXPECT_FALSE(s.contains(0.5));
  EXPECT_EQ(s.complement().intervals(), (std::vector<Interval>{{0.5, 0.5, true, true}}));
}

TEST(IntervalSet, ComplementIsInvolution) {
  IntervalSet s({0.1, 0.3, false, true});
  s.add({0.7, 1.0, true, true});
  const auto c = s.complement();
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    EXPECT_NE(s.contains(x), c.contains(x)) << x;
  }
  EXPECT_EQ(c.complement(), s);
  EXPECT_NEAR(s.length() + c.length(), 1.0, 1e-15);
  EXPECT_EQ(IntervalSet().complement().intervals(), (std::vector<Interval>{{0.0, 1.0, true, true}}));
  EXPECT_TRUE(IntervalSet({0.0, 1.0}).complement().empty());
}

TEST(IntervalSet, IntersectionWithWindow) {
  IntervalSet s({0.2, 0.8, false, false});
  const auto left = s.intersected({0.0, 0.5, true, false});
  EXPECT_EQ(left.intervals(), (std::vector<Interval>{{0.2, 0.5, false, false}}));
  const auto right = s.intersected({0.5, 1.0, true, true});
  EXPECT_EQ(right.intervals(), (std::vector<Interval>{{0.5, 0.8, true, false}}));
  EXPECT_TRUE(s.intersected({0.9, 1.0}).empty());
}

TEST(IntervalSet, Union) {
  const IntervalSet a({0.0, 0.2});
  const IntervalSet b({0.1, 0.4, false, false});
  const auto u = a.united(b);
  EXPECT_EQ(u.intervals(), (std::vector<Interval>{{0.0, 0.4, true, false}}));
}

}  // namespace
}  // namespace normdyn

#include <gtest/gtest.h>

#include <algorithm>

#include "sedq/oracles.h"
#include "test_support.h"

using namespace sedq;
using sedq::testing::Rng;

namespace {

Point P(double x, double y, int id = -1) { return Point{x, y, id}; }

// Smallest covering disk among all pair and triple disks: O(n^4).
Disk enumerate_sed(const std::vector<Point>& p) {
  Disk best;
  best.radius_sq = -1;
  auto consider = [&](const Disk& d) {
    for (const Point& q : p)
      if (!disk_contains_exact(d, q)) return;
    if (best.radius_sq < 0 || d.radius_sq < best.radius_sq) best = d;
  };
  if (p.size() == 1) return disk_from_point(p[0]);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      consider(disk_from_pair(p[i], p[j]));
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (orient_sign(p[i], p[j], p[k]) != 0) consider(disk_circum(p[i], p[j], p[k]));
    }
  return best;
}

std::vector<PointSet> singletons(const std::vector<Point>& p) {
  std::vector<PointSet> s;
  for (const Point& q : p) s.push_back({q});
  return s;
}

}  // namespace

TEST(Welzl, Examples) {
  Disk d = welzl(std::vector<Point>{P(0, 0, 0), P(1, 0, 1), P(1, 1, 2), P(0, 1, 3)});
  EXPECT_DOUBLE_EQ(d.center.x, 0.5);
  EXPECT_DOUBLE_EQ(d.center.y, 0.5);
  EXPECT_DOUBLE_EQ(d.radius_sq, 0.5);
  d = welzl(std::vector<Point>{P(0, 0, 0), P(4, 0, 1), P(1, 1, 2)});
  EXPECT_EQ(d.center.x, 2);
  EXPECT_EQ(d.center.y, 0);
  EXPECT_EQ(d.radius_sq, 4);
  EXPECT_EQ(d.support_size, 2);
}

TEST(Welzl, MatchesEnumerationAndIsValid) {
  Rng rng(51);
  for (int t = 0; t < 600; ++t) {
    auto p = t % 3 == 0 ? sedq::testing::grid_points(rng, 1 + t % 12, 5)
                        : sedq::testing::uniform_points(rng, 1 + t % 14);
    Disk w = welzl(p, t);
    EXPECT_TRUE(is_valid_sed(w, p)) << t;
    EXPECT_TRUE(sedq::testing::disks_match(w, enumerate_sed(p))) << t;
  }
}

TEST(Welzl, SeedIndependent) {
  Rng rng(52);
  auto p = sedq::testing::uniform_points(rng, 2000);
  Disk a = welzl(p, 1), b = welzl(p, 99);
  EXPECT_EQ(a.center.x, b.center.x);
  EXPECT_EQ(a.center.y, b.center.y);
  EXPECT_EQ(a.radius_sq, b.radius_sq);
}

TEST(IsValidSed, RejectsNonMinimal) {
  std::vector<Point> p = {P(0, 0, 0), P(2, 0, 1)};
  Disk big;
  big.center = P(1, 0);
  big.radius_sq = 4;
  EXPECT_FALSE(is_valid_sed(big, p));
  EXPECT_TRUE(is_valid_sed(disk_from_pair(p[0], p[1]), p));
}

TEST(FilterRect, ClosedBoundary) {
  std::vector<Point> p = {P(0, 0, 0), P(1, 1, 1), P(2, 2, 2), P(1, 3, 3)};
  auto in = filter_rect(p, Rect{0, 1, 0, 1});
  ASSERT_EQ(in.size(), 2u);
  EXPECT_EQ(in[0].id, 0);
  EXPECT_EQ(in[1].id, 1);
  EXPECT_TRUE(filter_rect(p, Rect{5, 6, 5, 6}).empty());
}

TEST(JarvisHull, MatchesMonotoneChain) {
  Rng rng(53);
  for (int t = 0; t < 400; ++t) {
    auto p = t % 2 ? sedq::testing::grid_points(rng, 1 + t % 40, 5) : sedq::testing::uniform_points(rng, 1 + t % 80);
    Hull a = jarvis_hull(p), b = build_hull(p);
    ASSERT_EQ(a.size(), b.size()) << t;
    for (int i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id, b[i].id) << t;
  }
}

TEST(Fcases, SingleSet) {
  std::vector<PointSet> all = {{P(0, 0, 0), P(2, 0, 1), P(1, 0.5, 2)}};
  auto c = fcases(all, {0}, {});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].sets, (std::vector<int>{0}));
  EXPECT_EQ(c[0].disk.radius_sq, 1);
}

TEST(Fcases, AllCasesAgree) {
  Rng rng(54);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    int m = 2 + t % 5;
    std::vector<PointSet> all;
    for (int i = 0; i < m; ++i) {
      auto s = sedq::testing::uniform_points(rng, 1 + rng() % 4);
      for (auto& q : s) q.id += 10 * i;
      all.push_back(s);
    }
    std::vector<int> S, R;
    for (int i = 0; i < m; ++i) (i < 1 + int(rng() % 2) ? R : S).push_back(i);
    auto c = fcases(all, S, R);
    if (c.empty()) continue;
    ++feasible;
    for (const BaseCase& b : c) EXPECT_TRUE(sedq::testing::disks_match(b.disk, c[0].disk)) << t;
  }
  EXPECT_GT(feasible, 50);
}

TEST(SetMinidisk, EqualsSedWhenDefined) {
  Rng rng(55);
  int defined = 0;
  for (int t = 0; t < 200; ++t) {
    int m = 1 + t % 6;
    std::vector<PointSet> all;
    std::vector<Point> pooled;
    for (int i = 0; i < m; ++i) {
      auto s = sedq::testing::uniform_points(rng, 1 + rng() % 3);
      for (auto& q : s) q.id += 10 * i;
      pooled.insert(pooled.end(), s.begin(), s.end());
      all.push_back(s);
    }
    std::vector<int> S(m);
    for (int i = 0; i < m; ++i) S[i] = i;
    MiniDisk d = set_minidisk(all, S, {}, std::uint64_t(t));
    if (!d.defined) continue;
    ++defined;
    EXPECT_TRUE(sedq::testing::disks_match(d.disk, welzl(pooled))) << t;
  }
  EXPECT_GT(defined, 100);
}

TEST(SetMinidisk, ThreeRequiredSetsAreTheFloor) {
  std::vector<PointSet> all = singletons({P(0, 0, 0), P(4, 0, 1), P(0, 4, 2), P(1, 1, 3)});
  MiniDisk d = set_minidisk(all, {3}, {0, 1, 2}, std::uint64_t(1));
  ASSERT_TRUE(d.defined);
  EXPECT_DOUBLE_EQ(d.disk.radius_sq, 8);
}

TEST(Counterexample, FiveSingletons) {
  auto p = sedq::testing::load_points("minidisk_five.txt");
  ASSERT_EQ(p.size(), 5u);
  auto all = singletons(p);
  // the narrated subproblem has no base case
  EXPECT_TRUE(fcases(all, {0, 1}, {3, 4}).empty());
  // while its parents do
  EXPECT_FALSE(fcases(all, {0, 1, 2, 3, 4}, {}).empty());
  EXPECT_FALSE(fcases(all, {0, 1, 2, 3}, {4}).empty());
  EXPECT_FALSE(fcases(all, {0, 1, 2}, {3, 4}).empty());
  const int order[] = {4, 3, 2, 1, 0};
  EXPECT_FALSE(set_minidisk(all, {0, 1, 2, 3, 4}, {}, order).defined);
  // the search that produced the fixture still reproduces it
  auto again = find_minidisk_counterexample(1, 200000);
  ASSERT_TRUE(again.has_value());
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(same_position((*again)[i], p[i]));
}

TEST(Counterexample, FourSingletons) {
  auto p = sedq::testing::load_points("undefined_four.txt");
  ASSERT_EQ(p.size(), 4u);
  auto all = singletons(p);
  EXPECT_TRUE(fcases(all, {0, 3}, {1, 2}).empty());
  // each candidate disk misses an excluded point
  for (int extra : {0, 3}) {
    Disk d = welzl(std::vector<Point>{p[1], p[2], p[extra]});
    EXPECT_FALSE(disk_contains_exact(d, p[3 - extra]));
  }
}

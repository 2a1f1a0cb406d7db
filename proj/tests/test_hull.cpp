#include <gtest/gtest.h>

#include <algorithm>

#include "sedq/hull.h"
#include "test_support.h"

using namespace sedq;
using sedq::testing::Rng;

namespace {

Point P(double x, double y, int id) { return Point{x, y, id}; }

void expect_valid_hull(const Hull& h, const std::vector<Point>& pts) {
  ASSERT_GE(h.size(), 1);
  for (const Point& p : pts) EXPECT_FALSE(lex_less(p, h[0]));
  if (h.size() >= 3) {
    for (int i = 0; i < h.size(); ++i) {
      EXPECT_EQ(orient_sign(h[i], h[(i + 1) % h.size()], h[(i + 2) % h.size()]), -1);
    }
    for (const Point& p : pts)
      for (int i = 0; i < h.size(); ++i) EXPECT_LE(orient_sign(h[i], h[(i + 1) % h.size()], p), 0);
  }
}

std::vector<int> ids(const Hull& h) {
  std::vector<int> out;
  for (const Point& p : h.vertices) out.push_back(p.id);
  return out;
}

Hull square(double x0, double y0, int id0) {
  return build_hull(std::vector<Point>{P(x0, y0, id0), P(x0 + 1, y0, id0 + 1),
                                       P(x0 + 1, y0 + 1, id0 + 2), P(x0, y0 + 1, id0 + 3)});
}

}  // namespace

TEST(BuildHull, Examples) {
  std::vector<Point> pts = {P(0, 0, 0), P(1, 0, 1), P(1, 1, 2), P(0, 1, 3), P(0.5, 0.5, 4)};
  Hull h = build_hull(pts);
  EXPECT_EQ(ids(h), (std::vector<int>{0, 3, 2, 1}));
  expect_valid_hull(h, pts);
  EXPECT_EQ(build_hull(std::vector<Point>{P(0, 0, 0)}).size(), 1);
  Hull c = build_hull(std::vector<Point>{P(0, 0, 0), P(1, 0, 1), P(2, 0, 2)});
  EXPECT_EQ(ids(c), (std::vector<int>{0, 2}));
  EXPECT_THROW(build_hull(std::vector<Point>{}), Error);
}

TEST(BuildHull, DuplicatesCollapseToSmallestId) {
  Hull h = build_hull(std::vector<Point>{P(1, 1, 5), P(1, 1, 2), P(0, 0, 7), P(0, 0, 3)});
  EXPECT_EQ(ids(h), (std::vector<int>{3, 2}));
}

TEST(BuildHull, RandomValid) {
  Rng rng(1);
  for (int t = 0; t < 300; ++t) {
    auto pts = t % 3 == 0 ? sedq::testing::grid_points(rng, 1 + t % 40, 5)
                          : sedq::testing::uniform_points(rng, 1 + t % 60);
    Hull h = build_hull(pts);
    expect_valid_hull(h, pts);
  }
}

TEST(MergeHulls, Examples) {
  Hull a = square(0, 0, 0), b = square(10, 0, 4);
  Hull m = merge_hulls(a.view(), b.view());
  EXPECT_EQ(ids(m), (std::vector<int>{0, 3, 6, 5}));
  Hull big = build_hull(std::vector<Point>{P(-5, -5, 10), P(5, -5, 11), P(5, 5, 12), P(-5, 5, 13)});
  EXPECT_EQ(ids(merge_hulls(big.view(), a.view())), ids(big));
}

TEST(MergeHulls, EqualsHullOfUnion) {
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    auto p = t % 4 == 0 ? sedq::testing::grid_points(rng, 2 + t % 30, 6)
                        : sedq::testing::uniform_points(rng, 2 + t % 50);
    std::size_t cut = 1 + rng() % (p.size() - 1);
    std::vector<Point> p1(p.begin(), p.begin() + cut), p2(p.begin() + cut, p.end());
    Hull m = merge_hulls(build_hull(p1).view(), build_hull(p2).view());
    EXPECT_EQ(ids(m), ids(build_hull(p)));
  }
}

TEST(Sections, Points) {
  std::vector<Point> pts;
  for (int i = 0; i < 5; ++i) pts.push_back(P(i, i, i));
  HullView v{pts.data(), nullptr, 5};
  auto idv = [](const std::vector<Point>& s) {
    std::vector<int> o;
    for (auto& p : s) o.push_back(p.id);
    return o;
  };
  EXPECT_EQ(idv(section_points(v, Section{-1, 2, 0})), (std::vector<int>{2, 3, 4, 0}));
  EXPECT_EQ(idv(section_points(v, Section{-1, 1, 1})), (std::vector<int>{1}));
  EXPECT_EQ(idv(section_points(v, Section{-1, 1, 0})), (std::vector<int>{1, 2, 3, 4, 0}));
  EXPECT_EQ(cyc_len(5, 3, 1), 4);
  EXPECT_TRUE(cyc_contains(5, 3, 1, 0));
  EXPECT_FALSE(cyc_contains(5, 3, 1, 2));
  EXPECT_FALSE(inner_section(5, 1, 2).has_value());
  auto in = inner_section(5, 3, 1);
  ASSERT_TRUE(in.has_value());
  EXPECT_EQ(in->a, 4);
  EXPECT_EQ(in->b, 0);
}

TEST(Tangents, PointToPolygonMatchesLinear) {
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    Hull h = sedq::testing::random_hull(rng, 3 + t % 80);
    std::uniform_real_distribution<double> u(-3, 4);
    Point x{u(rng), u(rng), -1};
    if (h.size() >= 3 && !(orient_sign(h[0], h[1], x) > 0)) {
      bool outside = false;
      for (int i = 0; i < h.size(); ++i)
        if (orient_sign(h[i], h[(i + 1) % h.size()], x) > 0) outside = true;
      if (!outside) continue;
    }
    for (Side s : {Side::Right, Side::Left}) {
      EXPECT_EQ(tangent_from_point(h.view(), x, s), tangent_from_point_linear(h.view(), x, s));
    }
  }
}

TEST(Tangents, SeparatedSquares) {
  Hull a = square(0, 0, 0), b = square(3, 0, 4);
  Tangents t = tangent_between(a.view(), b.view());
  // clockwise union walk: top of a -> top of b, bottom of b -> bottom of a
  EXPECT_EQ(a[t.h1_to_h2.from].id, 3);
  EXPECT_EQ(b[t.h1_to_h2.to].id, 6);
  EXPECT_EQ(b[t.h2_to_h1.from].id, 5);
  EXPECT_EQ(a[t.h2_to_h1.to].id, 0);
}

TEST(Tangents, PointAndSquare) {
  Hull a = build_hull(std::vector<Point>{P(-3, 0.5, 9)});
  Hull b = square(0, 0, 0);
  Tangents t = tangent_between(a.view(), b.view());
  EXPECT_EQ(b[t.h1_to_h2.to].id, 3);
  EXPECT_EQ(b[t.h2_to_h1.from].id, 0);
}

TEST(Tangents, RandomDisjointMatchBrute) {
  Rng rng(4);
  int checked = 0;
  for (int t = 0; t < 1500; ++t) {
    auto p = sedq::testing::uniform_points(rng, 2 + t % 60, 0, 1);
    // split by a random vertical or horizontal line into two point sets
    double c = 0.2 + 0.6 * (rng() % 1000) / 1000.0;
    bool vert = rng() % 2;
    std::vector<Point> p1, p2;
    for (auto& q : p) ((vert ? q.x : q.y) < c ? p1 : p2).push_back(q);
    if (p1.empty() || p2.empty()) continue;
    Hull h1 = build_hull(p1), h2 = build_hull(p2);
    Tangents fast = tangent_between(h1.view(), h2.view());
    Tangents slow = tangent_between_brute(h1.view(), h2.view());
    EXPECT_EQ(fast.h1_to_h2.from, slow.h1_to_h2.from);
    EXPECT_EQ(fast.h1_to_h2.to, slow.h1_to_h2.to);
    EXPECT_EQ(fast.h2_to_h1.from, slow.h2_to_h1.from);
    EXPECT_EQ(fast.h2_to_h1.to, slow.h2_to_h1.to);
    for (const Bridge& b : {fast.h1_to_h2}) {
      for (const Point& q : h1.vertices) EXPECT_LE(orient_sign(h1[b.from], h2[b.to], q), 0);
      for (const Point& q : h2.vertices) EXPECT_LE(orient_sign(h1[b.from], h2[b.to], q), 0);
    }
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(Tangents, DegenerateGridSplits) {
  Rng rng(5);
  int checked = 0, rejected = 0;
  for (int t = 0; t < 1500; ++t) {
    auto p = sedq::testing::grid_points(rng, 2 + t % 30, 8);
    // split in (x, id) order as the range tree does, so equal x may straddle
    std::sort(p.begin(), p.end(), [](auto& a, auto& b) { return a.x < b.x || (a.x == b.x && a.id < b.id); });
    std::size_t cut = 1 + rng() % (p.size() - 1);
    std::vector<Point> p1(p.begin(), p.begin() + cut), p2(p.begin() + cut, p.end());
    Hull h1 = build_hull(p1), h2 = build_hull(p2);
    bool shared = false;
    for (auto& a : h1.vertices)
      for (auto& b : h2.vertices) shared = shared || same_position(a, b);
    if (shared) continue;
    // a hull lying on the other's boundary has no bridge; both must agree on that
    Tangents slow;
    try {
      slow = tangent_between_brute(h1.view(), h2.view());
    } catch (const Error&) {
      EXPECT_THROW(tangent_between(h1.view(), h2.view()), Error) << t;
      ++rejected;
      continue;
    }
    Tangents fast = tangent_between(h1.view(), h2.view());
    EXPECT_EQ(fast.h1_to_h2.from, slow.h1_to_h2.from) << t;
    EXPECT_EQ(fast.h1_to_h2.to, slow.h1_to_h2.to) << t;
    EXPECT_EQ(fast.h2_to_h1.from, slow.h2_to_h1.from) << t;
    EXPECT_EQ(fast.h2_to_h1.to, slow.h2_to_h1.to) << t;
    ++checked;
  }
  EXPECT_GT(checked, 1000);
  EXPECT_GT(rejected, 0);
}

TEST(Tangents, OverlapDetected) {
  Hull a = square(0, 0, 0), b = square(0.5, 0.5, 4);
  EXPECT_THROW(tangent_between(a.view(), b.view()), Error);
}

TEST(Extremes, LexMaxAndExtremeVertex) {
  Rng rng(6);
  for (int t = 0; t < 500; ++t) {
    Hull h = build_hull(sedq::testing::uniform_points(rng, 3 + t % 100));
    int r = 0;
    for (int i = 1; i < h.size(); ++i)
      if (lex_less(h[r], h[i])) r = i;
    EXPECT_EQ(lex_max_index(h.view()), r);
    for (int k = 0; k < 8; ++k) {
      double ux = std::cos(k * 0.785398), uy = std::sin(k * 0.785398);
      int e = extreme_vertex(h.view(), ux, uy);
      double best = -1e300;
      for (auto& p : h.vertices) best = std::max(best, ux * p.x + uy * p.y);
      EXPECT_NEAR(ux * h[e].x + uy * h[e].y, best, 1e-12);
    }
  }
}

TEST(Extremes, StrictlyInside) {
  Rng rng(7);
  for (int t = 0; t < 300; ++t) {
    Hull h = build_hull(sedq::testing::grid_points(rng, 3 + t % 30, 6));
    if (h.size() < 3) continue;
    for (int x = -1; x <= 7; ++x)
      for (int y = -1; y <= 7; ++y) {
        Point q{double(x), double(y), -1};
        bool in = true;
        for (int i = 0; i < h.size(); ++i)
          if (orient_sign(h[i], h[(i + 1) % h.size()], q) >= 0) in = false;
        EXPECT_EQ(strictly_inside(h.view(), q), in) << t << " " << x << " " << y;
      }
  }
}

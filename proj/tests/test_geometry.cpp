#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "bicolor/geometry.hpp"

using namespace bicolor;

namespace {

ColoredPoint P(std::int64_t x, std::int64_t y) { return {x, y, Color::Red}; }

// Visibility by definition: the segment from x to p meets no hull edge in
// the interior of both.
std::set<int> visible_brute(const std::vector<ColoredPoint>& pts, const ColoredPoint& x) {
  auto h = convex_hull(std::span<const ColoredPoint>(pts), false).vertices;
  std::set<int> out;
  for (int p : h) {
    bool ok = true;
    for (std::size_t k = 0; k < h.size(); ++k) {
      int a = h[k], b = h[(k + 1) % h.size()];
      if (segments_cross(x, pts[p], pts[a], pts[b])) ok = false;
      // Passing through another hull vertex also blocks the view.
      if (a != p && orientation(x, pts[p], pts[a]) == 0) ok = false;
    }
    if (ok) out.insert(p);
  }
  return out;
}

}  // namespace

TEST(Orientation, Basic) {
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(0, 1)), 1);
  EXPECT_EQ(orientation(P(0, 0), P(1, 0), P(2, 0)), 0);
  EXPECT_EQ(orientation(P(0, 0), P(0, 1), P(1, 0)), -1);
}

TEST(Orientation, ExactNearLimit) {
  const std::int64_t L = kCoordinateLimit - 1;
  EXPECT_EQ(orientation(P(-L, -L), P(L, L), P(L - 1, L)), 1);
  EXPECT_EQ(orientation(P(-L, -L), P(L, L), P(L, L - 1)), -1);
  EXPECT_EQ(orientation(P(-L, -L), P(L, L), P(0, 0)), 0);
}

TEST(Orientation, Antisymmetric) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    auto a = P(d(rng), d(rng)), b = P(d(rng), d(rng)), c = P(d(rng), d(rng));
    EXPECT_EQ(orientation(a, b, c), -orientation(a, c, b));
  }
}

TEST(SegmentsCross, Examples) {
  EXPECT_TRUE(segments_cross(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(1, 1), P(1, 1), P(2, 0)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
  EXPECT_TRUE(segments_cross(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(1, 0), P(1, 0), P(2, 0)));
  EXPECT_FALSE(segments_cross(P(0, 0), P(2, 0), P(1, 0), P(1, 5)));
}

TEST(SegmentsCross, Symmetric) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  for (int i = 0; i < 5000; ++i) {
    auto a = P(d(rng), d(rng)), b = P(d(rng), d(rng)), c = P(d(rng), d(rng)), e = P(d(rng), d(rng));
    if (same_position(a, b) || same_position(c, e)) continue;
    const bool x = segments_cross(a, b, c, e);
    EXPECT_EQ(x, segments_cross(c, e, a, b));
    EXPECT_EQ(x, segments_cross(b, a, e, c));
  }
}

TEST(ConvexHull, SquareAndCenter) {
  std::vector<ColoredPoint> sq{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  auto h = convex_hull(std::span<const ColoredPoint>(sq));
  EXPECT_EQ(h.vertices, (std::vector<int>{0, 1, 2, 3}));
  sq.push_back(P(1, 1));
  EXPECT_THROW(convex_hull(std::span<const ColoredPoint>(sq)), DegenerateInput);
  std::vector<ColoredPoint> sq2{P(0, 0), P(4, 0), P(4, 4), P(0, 4), P(1, 2)};
  auto h2 = convex_hull(std::span<const ColoredPoint>(sq2));
  EXPECT_EQ(h2.size(), 4u);
  EXPECT_FALSE(h2.contains(4));
}

TEST(ConvexHull, CollinearRejected) {
  std::vector<ColoredPoint> line{P(0, 0), P(1, 1), P(2, 2)};
  EXPECT_THROW(convex_hull(std::span<const ColoredPoint>(line)), DegenerateInput);
  std::vector<ColoredPoint> dup{P(0, 0), P(1, 1), P(0, 0)};
  EXPECT_THROW(convex_hull(std::span<const ColoredPoint>(dup)), DegenerateInput);
}

TEST(ConvexHull, PermutationInvariant) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ColoredPoint> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(P(d(rng), d(rng)));
    if (find_collinear_triple(std::span<const ColoredPoint>(pts))) continue;
    auto h = convex_hull(std::span<const ColoredPoint>(pts)).vertices;
    std::vector<int> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ColoredPoint> q;
    for (int i : perm) q.push_back(pts[i]);
    auto h2 = convex_hull(std::span<const ColoredPoint>(q)).vertices;
    for (int& v : h2) v = perm[v];
    ASSERT_EQ(h.size(), h2.size());
    auto it = std::find(h2.begin(), h2.end(), h[0]);
    std::rotate(h2.begin(), it, h2.end());
    EXPECT_EQ(h, h2);
    for (std::size_t k = 0; k < h.size(); ++k)
      EXPECT_EQ(orientation(pts[h[k]], pts[h[(k + 1) % h.size()]], pts[h[(k + 2) % h.size()]]), 1);
  }
}

TEST(RadialOrder, Examples) {
  std::vector<ColoredPoint> s{P(1, 0), P(1, 1), P(0, 1)};
  EXPECT_EQ(radial_order(std::span<const ColoredPoint>(s), P(0, 0), Rotation::CounterClockwise),
            (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(radial_order(std::span<const ColoredPoint>(s), P(0, 0), Rotation::Clockwise), (std::vector<int>{2, 1, 0}));
  std::vector<ColoredPoint> tie{P(1, 0), P(2, 0), P(0, 1)};
  EXPECT_THROW(radial_order(std::span<const ColoredPoint>(tie), P(0, 0), Rotation::CounterClockwise), DegenerateInput);
  std::vector<ColoredPoint> around{P(1, 0), P(-1, 1), P(0, -1)};
  EXPECT_THROW(radial_order(std::span<const ColoredPoint>(around), P(0, 0), Rotation::CounterClockwise),
               PreconditionViolated);
}

TEST(Visibility, SquareFromRight) {
  std::vector<ColoredPoint> sq{P(0, 0), P(2, 0), P(2, 2), P(0, 2)};
  auto v = visible_points(std::span<const ColoredPoint>(sq), P(4, 1));
  EXPECT_EQ(v, (std::vector<int>{1, 2}));
  EXPECT_EQ(tangents_from(std::span<const ColoredPoint>(sq), P(4, 1)), std::make_pair(1, 2));
  EXPECT_THROW(visible_points(std::span<const ColoredPoint>(sq), P(1, 1)), PointInsideHull);
  EXPECT_THROW(visible_points(std::span<const ColoredPoint>(sq), P(1, 0)), PointInsideHull);
}

TEST(Visibility, SmallHulls) {
  std::vector<ColoredPoint> one{P(3, 3)};
  EXPECT_EQ(visible_points(std::span<const ColoredPoint>(one), P(0, 0)), (std::vector<int>{0}));
  std::vector<ColoredPoint> two{P(0, 0), P(2, 0)};
  auto t = tangents_from(std::span<const ColoredPoint>(two), P(1, 5));
  EXPECT_EQ(std::set<int>({t.first, t.second}), std::set<int>({0, 1}));
}

TEST(Visibility, TriangleFarSide) {
  std::vector<ColoredPoint> tri{P(0, 0), P(4, 0), P(2, 4)};
  // Beyond the bottom edge, opposite the apex: only the base is visible.
  auto t = tangents_from(std::span<const ColoredPoint>(tri), P(2, -3));
  EXPECT_EQ(std::set<int>({t.first, t.second}), std::set<int>({0, 1}));
  EXPECT_EQ(visible_points(std::span<const ColoredPoint>(tri), P(2, -3)).size(), 2u);
}

TEST(Visibility, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<ColoredPoint> pts;
    for (int i = 0; i < 9; ++i) pts.push_back(P(d(rng), d(rng)));
    ColoredPoint x = P(d(rng) * 2, d(rng) * 2);
    auto all = pts;
    all.push_back(x);
    if (find_collinear_triple(std::span<const ColoredPoint>(all))) continue;
    auto h = convex_hull(std::span<const ColoredPoint>(all)).vertices;
    if (std::find(h.begin(), h.end(), 9) == h.end()) {
      EXPECT_THROW(visible_points(std::span<const ColoredPoint>(pts), x), PointInsideHull);
      continue;
    }
    auto v = visible_points(std::span<const ColoredPoint>(pts), x);
    EXPECT_EQ(std::set<int>(v.begin(), v.end()), visible_brute(pts, x));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(CollinearTriple, Finds) {
  std::vector<ColoredPoint> pts{P(0, 0), P(5, 1), P(3, 7), P(10, 2), P(-4, 9)};
  auto t = find_collinear_triple(std::span<const ColoredPoint>(pts));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (std::vector<int>{0, 1, 3}));
}

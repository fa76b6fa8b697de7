#include <gtest/gtest.h>

#include <random>

#include "bicolor/general_builder.hpp"
#include "bicolor/oracle.hpp"

using namespace bicolor;

namespace {

ColoredPoint R(std::int64_t x, std::int64_t y) { return {x, y, Color::Red}; }
ColoredPoint B(std::int64_t x, std::int64_t y) { return {x, y, Color::Blue}; }

enum class Family { Uniform, RedHull, Clusters, Annulus };

std::vector<ColoredPoint> sample(std::mt19937_64& rng, int red, int blue, Family f, std::int64_t span = 1000) {
  std::uniform_int_distribution<std::int64_t> d(-span, span);
  std::normal_distribution<double> g(0.0, span / 6.0);
  while (true) {
    std::vector<ColoredPoint> pts;
    for (int i = 0; i < red + blue; ++i) {
      const Color c = i < red ? Color::Red : Color::Blue;
      ColoredPoint p{d(rng), d(rng), c};
      switch (f) {
        case Family::Uniform:
          break;
        case Family::RedHull: {
          // Reds on a big circle, blues well inside.
          const double t = std::uniform_real_distribution<double>(0, 6.283185307179586)(rng);
          const double rad = c == Color::Red ? span : span * 0.3 * std::sqrt(std::uniform_real_distribution<double>(0, 1)(rng));
          const double u = c == Color::Red ? t : std::uniform_real_distribution<double>(0, 6.283185307179586)(rng);
          p.x = static_cast<std::int64_t>(std::llround(rad * std::cos(u)));
          p.y = static_cast<std::int64_t>(std::llround(rad * std::sin(u)));
          break;
        }
        case Family::Clusters: {
          const std::int64_t cx = c == Color::Red ? -span / 2 : span / 2;
          p.x = cx + static_cast<std::int64_t>(std::llround(g(rng)));
          p.y = static_cast<std::int64_t>(std::llround(g(rng)));
          break;
        }
        case Family::Annulus: {
          const double u = std::uniform_real_distribution<double>(0, 6.283185307179586)(rng);
          const double rad = span * std::uniform_real_distribution<double>(0.8, 1.0)(rng);
          p.x = static_cast<std::int64_t>(std::llround(rad * std::cos(u)));
          p.y = static_cast<std::int64_t>(std::llround(rad * std::sin(u)));
          break;
        }
      }
      pts.push_back(p);
    }
    if (!find_collinear_triple(std::span<const ColoredPoint>(pts))) return pts;
  }
}

::testing::AssertionResult route_ok(const BicoloredSet& s, const AltRoute& r, std::optional<std::pair<int, int>> ends) {
  VerifyOptions o;
  o.endpoints = ends;
  auto rep = verify_route(s, r, o);
  if (rep.ok()) return ::testing::AssertionSuccess();
  auto f = ::testing::AssertionFailure();
  for (const auto& v : rep.violations) f << v << "; ";
  return f;
}

}  // namespace

TEST(BuildPath, TwoPoints) {
  auto s = BicoloredSet::general_position({R(0, 0), B(1, 0)});
  auto r = build_path(s, 0, 1);
  EXPECT_EQ(r.vertices, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.crossing_count(), 0);
}

TEST(BuildPath, SpecialConfigurationRejected) {
  auto s = BicoloredSet::convex_sequence("RRBBBR");
  EXPECT_THROW(build_path(s, 0, 3), SpecialConfiguration);
  EXPECT_NO_THROW(build_path(s, 0, 2));
}

TEST(BuildPath, Preconditions) {
  auto s = BicoloredSet::general_position({R(0, 0), B(10, 0), R(10, 10), B(0, 10), R(5, 4), B(4, 7)});
  EXPECT_THROW(build_path(s, 0, 4), PreconditionViolated);  // 4 is interior
  EXPECT_THROW(build_path(s, 0, 2), PreconditionViolated);  // same colors, balanced
  EXPECT_THROW(build_path(s, 0, 9), PreconditionViolated);
}

TEST(BuildCycle, SmallExamples) {
  auto sq = BicoloredSet::general_position({R(0, 0), B(1, 0), R(1, 1), B(0, 1)});
  auto c = build_cycle(sq);
  EXPECT_TRUE(route_ok(sq, c, std::nullopt));
  EXPECT_EQ(c.crossing_count(), 0);

  auto r3b3 = BicoloredSet::convex_sequence("RRRBBB");
  auto c3 = build_cycle(r3b3);
  EXPECT_TRUE(route_ok(r3b3, c3, std::nullopt));
  EXPECT_LE(c3.crossing_count(), 2);
  EXPECT_EQ(*enumerate_min(r3b3, OracleQuery::cycle()).min_crossings, 2);

  auto inside = BicoloredSet::general_position({R(0, 0), R(100, 0), R(50, 90), B(50, 30), B(40, 20), B(61, 22)});
  auto ci = build_cycle(inside);
  EXPECT_TRUE(route_ok(inside, ci, std::nullopt));
  EXPECT_LE(ci.crossing_count(), 2);
}

TEST(BuildCycle, RandomFamilies) {
  std::mt19937_64 rng(101);
  for (Family f : {Family::Uniform, Family::RedHull, Family::Clusters, Family::Annulus})
    for (int trial = 0; trial < 80; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 24);
      auto s = BicoloredSet::general_position(sample(rng, n, n, f));
      auto c = build_cycle(s);
      ASSERT_TRUE(route_ok(s, c, std::nullopt)) << "family " << static_cast<int>(f) << " n=" << n;
    }
}

TEST(BuildPath, RandomBalancedAllHullPairs) {
  std::mt19937_64 rng(103);
  int built = 0;
  for (Family f : {Family::Uniform, Family::RedHull, Family::Clusters, Family::Annulus})
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 14);
      auto s = BicoloredSet::general_position(sample(rng, n, n, f));
      for (int a : s.hull())
        for (int b : s.hull()) {
          if (s.color(a) == s.color(b)) continue;
          if (is_special(s, a, b)) {
            EXPECT_THROW(build_path(s, a, b), SpecialConfiguration);
            continue;
          }
          auto r = build_path(s, a, b);
          ASSERT_TRUE(route_ok(s, r, std::make_pair(a, b))) << "family " << static_cast<int>(f) << " n=" << n;
          ++built;
        }
    }
  EXPECT_GT(built, 500);
}

TEST(BuildPath, RandomExcessAllHullPairs) {
  std::mt19937_64 rng(107);
  int built = 0;
  for (Family f : {Family::Uniform, Family::RedHull, Family::Clusters, Family::Annulus})
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 14);
      const bool red_major = trial % 2 == 0;
      auto s = BicoloredSet::general_position(sample(rng, red_major ? n + 1 : n, red_major ? n : n + 1, f));
      const Color major = red_major ? Color::Red : Color::Blue;
      for (int a : s.hull())
        for (int b : s.hull()) {
          if (a == b || s.color(a) != major || s.color(b) != major) continue;
          auto r = build_path(s, a, b);
          ASSERT_TRUE(route_ok(s, r, std::make_pair(a, b))) << "family " << static_cast<int>(f) << " n=" << n;
          ++built;
        }
    }
  EXPECT_GT(built, 300);
}

TEST(BuildPath, ConvexSequencesAllPairs) {
  for (int len = 2; len <= 12; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string seq;
      for (int k = 0; k < len; ++k) seq.push_back((mask >> k) & 1 ? 'B' : 'R');
      const int red = static_cast<int>(std::count(seq.begin(), seq.end(), 'R'));
      if (std::abs(2 * red - len) > 1) continue;
      auto s = BicoloredSet::convex_sequence(seq);
      for (int a = 0; a < len; ++a)
        for (int b = 0; b < len; ++b) {
          if (a == b) continue;
          const bool balanced = 2 * red == len;
          if (balanced ? seq[a] == seq[b] : (seq[a] != seq[b] || (seq[a] == 'R') != (2 * red > len))) continue;
          if (balanced && is_special(s, a, b)) continue;
          auto r = build_path(s, a, b);
          ASSERT_TRUE(route_ok(s, r, std::make_pair(a, b))) << seq << " " << a << "->" << b;
        }
    }
}

TEST(BuildPath, MatchesOracleFeasibilityOnSmallSets) {
  // Whenever the builder succeeds the oracle agrees a 1-plane path exists
  // and its minimum never exceeds the builder's count.
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = BicoloredSet::general_position(sample(rng, 4, 4, trial % 2 ? Family::Uniform : Family::RedHull, 60));
    for (int a : s.hull())
      for (int b : s.hull()) {
        if (s.color(a) == s.color(b) || is_special(s, a, b)) continue;
        auto r = build_path(s, a, b);
        auto o = enumerate_min(s, OracleQuery::path(a, b), {14, 1, false});
        ASSERT_TRUE(o.min_crossings);
        EXPECT_LE(*o.min_crossings, r.crossing_count());
        EXPECT_TRUE(exists_one_plane(s, OracleQuery::path(a, b)));
      }
  }
}

TEST(BuildCycle, Deterministic) {
  std::mt19937_64 rng(113);
  auto pts = sample(rng, 30, 30, Family::Uniform);
  auto s = BicoloredSet::general_position(pts);
  EXPECT_EQ(build_cycle(s).vertices, build_cycle(s).vertices);
}

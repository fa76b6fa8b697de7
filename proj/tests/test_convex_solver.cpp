#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "bicolor/convex_solver.hpp"
#include "bicolor/oracle.hpp"

using namespace bicolor;

namespace {

std::string bits(int mask, int len) {
  std::string s;
  for (int k = 0; k < len; ++k) s.push_back((mask >> k) & 1 ? 'B' : 'R');
  return s;
}

// First balance point by walking from i in the given rotation.
int j_walk(const std::string& seq, int i, Rotation dir) {
  const int h = static_cast<int>(seq.size());
  int bal = 0;
  for (int k = 0; k < h; ++k) {
    const int p = dir == Rotation::Clockwise ? (i + k) % h : ((i - k) % h + h) % h;
    bal += seq[static_cast<std::size_t>(p)] == seq[static_cast<std::size_t>(i)] ? 1 : -1;
    if (bal == 0) return p;
  }
  return -1;
}

bool path_query_ok(const std::string& seq, int a, int b) {
  const int red = static_cast<int>(std::count(seq.begin(), seq.end(), 'R'));
  const int blue = static_cast<int>(seq.size()) - red;
  if (a == b) return false;
  if (red == blue) return seq[a] != seq[b];
  if (std::abs(red - blue) != 1) return false;
  const char major = red > blue ? 'R' : 'B';
  return seq[a] == major && seq[b] == major;
}

void expect_valid(const BicoloredSet& s, const AltRoute& r, int a, int b) {
  VerifyOptions o;
  o.check_bound = false;
  o.require_one_plane = false;
  if (a >= 0) o.endpoints = std::make_pair(a, b);
  auto rep = verify_route(s, r, o);
  EXPECT_TRUE(rep.ok()) << s.color_string() << " " << a << "->" << b << ": "
                        << (rep.violations.empty() ? "" : rep.violations.front());
}

}  // namespace

TEST(JPairs, MatchesWalkOnAllSequences) {
  for (int len = 2; len <= 12; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      const auto seq = bits(mask, len);
      auto s = BicoloredSet::convex_sequence(seq);
      for (Color role : {Color::Red, Color::Blue}) {
        const int mine = s.count(role), other = s.count(opposite(role));
        if (mine != other && mine != other + 1) {
          EXPECT_THROW(j_pairs(s, Rotation::Clockwise, role), PreconditionViolated);
          continue;
        }
        for (Rotation dir : {Rotation::Clockwise, Rotation::CounterClockwise}) {
          auto jm = j_pairs(s, dir, role);
          int unpaired = 0;
          for (int i = 0; i < len; ++i) {
            if (s.color(i) != role) {
              EXPECT_EQ(jm.partner[i], -1);
              continue;
            }
            const int walk = j_walk(seq, i, dir);
            if (jm.partner[i] < 0) {
              ++unpaired;
              EXPECT_EQ(walk, -1) << seq;
            } else {
              EXPECT_EQ(jm.partner[i], walk) << seq << " i=" << i;
            }
          }
          EXPECT_EQ(unpaired, mine - other);
        }
      }
    }
}

TEST(ConvexSolver, SpecExamples) {
  auto rrbb = BicoloredSet::convex_sequence("RRBB");
  EXPECT_EQ(optimum_cycle(rrbb).crossing_count(), 1);
  auto alt = BicoloredSet::convex_sequence("RBRBRB");
  EXPECT_EQ(optimum_cycle(alt).crossing_count(), 0);
  auto special = BicoloredSet::convex_sequence("RRBBBR");
  auto p = optimum_path(special, 0, 3);
  EXPECT_EQ(p.crossing_count(), 2);
  EXPECT_EQ(p.max_edge_crossings(), 2);
  EXPECT_EQ(p.vertices, (std::vector<int>{0, 4, 5, 2, 1, 3}));
}

TEST(ConvexSolver, CycleMatchesOracle) {
  for (int len = 4; len <= 12; len += 2)
    for (int mask = 0; mask < (1 << len); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != len / 2) continue;
      const auto seq = bits(mask, len);
      auto s = BicoloredSet::convex_sequence(seq);
      auto r = optimum_cycle(s);
      expect_valid(s, r, -1, -1);
      const int bound = s.red_count() - std::max(s.runs().red_runs, s.runs().blue_runs);
      EXPECT_EQ(r.crossing_count(), bound) << seq;
      EXPECT_LE(r.max_edge_crossings(), 1) << seq;
      if (len <= 10) {
        auto o = enumerate_min(s, OracleQuery::cycle());
        ASSERT_TRUE(o.min_crossings);
        EXPECT_EQ(r.crossing_count(), *o.min_crossings) << seq;
      }
    }
}

TEST(ConvexSolver, PathMatchesOracle) {
  for (int len = 2; len <= 10; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      const auto seq = bits(mask, len);
      const int red = static_cast<int>(std::count(seq.begin(), seq.end(), 'R'));
      if (std::abs(2 * red - len) > 1) continue;
      auto s = BicoloredSet::convex_sequence(seq);
      for (int a = 0; a < len; ++a)
        for (int b = 0; b < len; ++b) {
          if (!path_query_ok(seq, a, b)) {
            if (a != b) {
              EXPECT_THROW(optimum_path(s, a, b), PreconditionViolated);
            }
            continue;
          }
          auto r = optimum_path(s, a, b);
          expect_valid(s, r, a, b);
          auto o = enumerate_min(s, OracleQuery::path(a, b), {14, 1, false});
          ASSERT_TRUE(o.min_crossings);
          ASSERT_EQ(r.crossing_count(), *o.min_crossings) << seq << " " << a << "->" << b;
        }
    }
}

TEST(ConvexSolver, TableEntriesAreSubproblemOptima) {
  // Every finite interval entry equals the oracle optimum on that interval
  // taken as a convex set of its own.
  for (int len = 4; len <= 9; ++len)
    for (int mask = 0; mask < (1 << len); ++mask) {
      const auto seq = bits(mask, len);
      auto s = BicoloredSet::convex_sequence(seq);
      for (int t = 0; t < len; ++t) {
        auto tab = path_tables(s, t, t);
        for (int pi = 0; pi < len; ++pi)
          for (int span = 1; span < len; ++span) {
            const int pj = (pi + span) % len;
            // Interval [pi..pj] must contain t.
            if ((t - pi + len) % len > span) continue;
            std::string sub;
            for (int k = 0; k <= span; ++k) sub.push_back(seq[(pi + k) % len]);
            auto ss = BicoloredSet::convex_sequence(sub);
            const int tl = (t - pi + len) % len;
            for (int side = 0; side < 2; ++side) {
              const int from = side == 0 ? 0 : span;
              if (from == tl) continue;
              auto got = side == 0 ? tab.from_start(pi, pj) : tab.from_end(pi, pj);
              if (!got) continue;
              auto want = enumerate_min(ss, OracleQuery::path(from, tl), {14, 1, false});
              ASSERT_TRUE(want.min_crossings) << sub;
              EXPECT_EQ(*got, *want.min_crossings) << seq << " t=" << t << " [" << pi << ".." << pj << "] side " << side;
            }
          }
      }
    }
}

TEST(ConvexSolver, ConsecutiveAndSpecialBounds) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 60);
    std::string seq(static_cast<std::size_t>(n), 'R');
    seq.append(static_cast<std::size_t>(n), 'B');
    std::shuffle(seq.begin(), seq.end(), rng);
    auto s = BicoloredSet::convex_sequence(seq);
    const int h = 2 * n;
    for (int a = 0; a < h; ++a) {
      const int b = (a + 1) % h;
      if (seq[a] == seq[b]) continue;
      auto r = optimum_path_consecutive(s, a, b);
      expect_valid(s, r, a, b);
      EXPECT_EQ(r.crossing_count(), n - s.runs().runs_of(s.color(a)));
    }
  }
  int special = 0;
  for (int len = 6; len <= 14; len += 2)
    for (int mask = 0; mask < (1 << len); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != len / 2) continue;
      auto s = BicoloredSet::convex_sequence(bits(mask, len));
      for (int r = 0; r < len; ++r)
        for (int b = 0; b < len; ++b) {
          if (s.color(r) != Color::Red || s.color(b) != Color::Blue || !is_special(s, r, b)) continue;
          auto p = optimum_path_special(s, r, b);
          expect_valid(s, p, r, b);
          EXPECT_EQ(p.crossing_count(), s.red_count() - s.runs().red_runs);
          EXPECT_EQ(p.max_edge_crossings(), 2);
          ++special;
        }
    }
  EXPECT_GT(special, 20);
}

TEST(ConvexSolver, LargeCycleIsFast) {
  std::mt19937_64 rng(43);
  const int n = 500000;
  std::string seq(static_cast<std::size_t>(n), 'R');
  seq.append(static_cast<std::size_t>(n), 'B');
  std::shuffle(seq.begin(), seq.end(), rng);
  auto s = BicoloredSet::convex_sequence(seq);
  const auto t0 = std::chrono::steady_clock::now();
  auto r = optimum_cycle(s);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_EQ(r.crossing_count(), n - s.runs().red_runs);
  EXPECT_LT(secs, 2.0);
}

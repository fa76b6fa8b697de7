#pragma once
/**
 * Minimum-crossing alternating cycles and paths on points in convex position.
 *
 * Everything here is combinatorial: a convex set is its clockwise color
 * sequence and two chords cross iff their endpoints interleave.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/route.hpp"

namespace bicolor {

/// First balance partners produced by the two-list J-PAIRS scan.  partner[i]
/// is -1 for points of the other color and for the role point left without
/// a partner.
struct JMap {
  Rotation direction = Rotation::Clockwise;
  Color role = Color::Red;
  std::vector<int> partner;
};

namespace detail {

inline void require_convex(const BicoloredSet& s) {
  if (!s.is_convex()) throw PreconditionViolated("convex solver needs a convex color sequence");
}

inline int sign_of(Color c) noexcept { return c == Color::Red ? 1 : -1; }

// Optimum path between the first and last entry of `x`, which must be
// consecutive in the cyclic order of the subset x lists (in either
// rotation).  Colors must be balanced with different end colors, or the end
// color must lead by one.  Runs in O(|x|) with an explicit task stack.
inline std::vector<int> consecutive_walk(const BicoloredSet& s, const std::vector<int>& x) {
  const int m = static_cast<int>(x.size());
  std::vector<int> out;
  if (m == 0) return out;
  out.reserve(static_cast<std::size_t>(m));
  std::vector<int> sg(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) sg[static_cast<std::size_t>(k)] = sign_of(s.color(x[static_cast<std::size_t>(k)]));

  // nxt[k]: smallest q > k with pre[q] == pre[k], over prefix positions 0..m.
  std::vector<int> pre(static_cast<std::size_t>(m) + 1, 0);
  for (int k = 0; k < m; ++k) pre[static_cast<std::size_t>(k) + 1] = pre[static_cast<std::size_t>(k)] + sg[static_cast<std::size_t>(k)];
  std::vector<int> last(2 * static_cast<std::size_t>(m) + 1, -1);
  std::vector<int> nxt(static_cast<std::size_t>(m) + 1, -1);
  for (int k = m; k >= 0; --k) {
    int& slot = last[static_cast<std::size_t>(pre[static_cast<std::size_t>(k)] + m)];
    nxt[static_cast<std::size_t>(k)] = slot;
    slot = k;
  }
  auto col = [&](int k) { return sg[static_cast<std::size_t>(k)]; };

  struct Task {
    int lo, hi;
    bool rev;
    bool emit_only;
  };
  bool skip_next = false;
  auto emit = [&](int k) {
    if (skip_next) {
      skip_next = false;
      return;
    }
    out.push_back(x[static_cast<std::size_t>(k)]);
  };
  constexpr int kSkip = -1;
  std::vector<Task> stack;
  stack.push_back({0, m - 1, false, false});
  // Tasks are pushed in reverse of their output order.
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.lo == kSkip) {
      skip_next = true;
      continue;
    }
    if (t.emit_only) {
      emit(t.lo);
      continue;
    }
    const int lo = t.lo, hi = t.hi;
    if (lo == hi) {
      emit(lo);
      continue;
    }
    if (hi == lo + 1) {
      emit(t.rev ? hi : lo);
      emit(t.rev ? lo : hi);
      continue;
    }
    auto point = [](int k) { return Task{k, k, false, true}; };
    auto sub = [](int a, int b, bool r) { return Task{a, b, r, false}; };
    const bool opposite_ends = col(lo) != col(hi);
    // A neighbor of the other color lets the path start (or end) with a
    // boundary edge.
    const bool lo_step = col(lo + 1) != col(lo);
    const bool hi_step = col(hi - 1) != col(hi);
    if (lo_step) {
      // F = lo + F(lo+1, hi)
      if (!t.rev) {
        stack.push_back(sub(lo + 1, hi, false));
        stack.push_back(point(lo));
      } else {
        stack.push_back(point(lo));
        stack.push_back(sub(lo + 1, hi, true));
      }
    } else if (hi_step) {
      // F = F(lo, hi-1) + hi
      if (!t.rev) {
        stack.push_back(point(hi));
        stack.push_back(sub(lo, hi - 1, false));
      } else {
        stack.push_back(sub(lo, hi - 1, true));
        stack.push_back(point(hi));
      }
    } else if (opposite_ends) {
      // F = lo + R(lo+1, hi-1) + hi; the two end chords cross once.
      if (!t.rev) {
        stack.push_back(point(hi));
        stack.push_back(sub(lo + 1, hi - 1, true));
        stack.push_back(point(lo));
      } else {
        stack.push_back(point(lo));
        stack.push_back(sub(lo + 1, hi - 1, false));
        stack.push_back(point(hi));
      }
    } else {
      // Both ends and both inner neighbors share one color: split at the
      // first balance point q, F = F(lo, q) + F(q, hi) without repeating q.
      const int q = nxt[static_cast<std::size_t>(lo)] - 1;
      if (q <= lo || q >= hi) throw InternalError("consecutive walk: missing balance point");
      if (!t.rev) {
        stack.push_back(sub(q, hi, false));
        stack.push_back(Task{kSkip, kSkip, false, false});
        stack.push_back(sub(lo, q, false));
      } else {
        stack.push_back(sub(lo, q, true));
        stack.push_back(Task{kSkip, kSkip, false, false});
        stack.push_back(sub(q, hi, true));
      }
    }
  }
  return out;
}

// Crossings of an optimum path between consecutive ends of a cyclic subset:
// (size - excess - color changes) / 2, or nullopt if the counts do not fit.
inline std::optional<int> consecutive_cost(int size, int balance, int changes, int sa, int sb) {
  if (size == 1) return sa == sb ? std::optional<int>(0) : std::nullopt;
  if (sa != sb) {
    if (balance != 0) return std::nullopt;
    return (size - changes) / 2;
  }
  if (balance != sa) return std::nullopt;
  return (size - 1 - changes) / 2;
}

inline void check_path_counts(const BicoloredSet& s, int a, int b) {
  if (a < 0 || b < 0 || a >= s.size() || b >= s.size()) throw PreconditionViolated("endpoint out of range");
  const int red = s.red_count();
  const int blue = s.blue_count();
  if (a == b) {
    if (s.size() != 1) throw PreconditionViolated("path endpoints must differ");
    return;
  }
  if (red == blue) {
    if (s.color(a) == s.color(b)) throw PreconditionViolated("balanced sets need endpoints of different colors");
    return;
  }
  if (std::abs(red - blue) != 1) throw PreconditionViolated("color counts must be equal or differ by one");
  const Color major = red > blue ? Color::Red : Color::Blue;
  if (s.color(a) != major || s.color(b) != major)
    throw PreconditionViolated("with one extra point of a color, both endpoints must have that color");
}

}  // namespace detail

inline JMap j_pairs(const BicoloredSet& s, Rotation dir, Color role) {
  detail::require_convex(s);
  const int h = s.size();
  const int mine = s.count(role);
  const int other = s.count(opposite(role));
  if (mine != other && mine != other + 1)
    throw PreconditionViolated("j_pairs: the role color must match the other color or lead by one");
  JMap jm{dir, role, std::vector<int>(static_cast<std::size_t>(h), -1)};
  std::vector<int> lr;
  std::vector<int> lb;
  lr.reserve(static_cast<std::size_t>(mine));
  for (int k = 0; k < h; ++k) {
    const int p = dir == Rotation::Clockwise ? k : (h - k) % h;
    if (s.color(p) == role) {
      lr.push_back(p);
    } else if (!lr.empty()) {
      jm.partner[static_cast<std::size_t>(lr.back())] = p;
      lr.pop_back();
    } else {
      lb.push_back(p);
    }
  }
  // Leftover lists pair last-with-first; one role point may stay unpaired.
  std::size_t f = 0;
  while (!lr.empty() && f < lb.size()) {
    jm.partner[static_cast<std::size_t>(lr.back())] = lb[f++];
    lr.pop_back();
  }
  return jm;
}

/// Optimum path between hull-consecutive endpoints.
inline AltRoute optimum_path_consecutive(const BicoloredSet& s, int a, int b) {
  detail::require_convex(s);
  detail::check_path_counts(s, a, b);
  const int h = s.size();
  if (h == 1) return make_route(s, RouteKind::Path, {a});
  std::vector<int> x;
  x.reserve(static_cast<std::size_t>(h));
  if ((a + h - 1) % h == b) {
    for (int k = 0; k < h; ++k) x.push_back((a + k) % h);
  } else if ((a + 1) % h == b) {
    for (int k = 0; k < h; ++k) x.push_back((a - k + h) % h);
  } else {
    throw PreconditionViolated("endpoints are not consecutive");
  }
  return make_route(s, RouteKind::Path, detail::consecutive_walk(s, x));
}

/// Optimum cycle: the consecutive path between the ends of the first bridge,
/// closed by that bridge.
inline AltRoute optimum_cycle(const BicoloredSet& s) {
  detail::require_convex(s);
  if (s.red_count() != s.blue_count() || s.red_count() < 2)
    throw PreconditionViolated("optimum cycle needs n >= 2 points of each color");
  const auto [u, v] = s.runs().bridges.front();
  const int h = s.size();
  std::vector<int> x;
  x.reserve(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) x.push_back((v + k) % h);
  if (x.back() != u) throw InternalError("bridge endpoints are not consecutive");
  return make_route(s, RouteKind::Cycle, detail::consecutive_walk(s, x));
}

/// Optimum path for a special configuration: two consecutive-end paths on
/// the arcs beside r and b, joined by three connecting edges.
inline AltRoute optimum_path_special(const BicoloredSet& s, int r, int b) {
  detail::require_convex(s);
  if (!is_special(s, r, b)) throw PreconditionViolated("configuration is not special");
  const int h = s.size();
  const int p1 = (r + h - 1) % h;
  const int p2 = (r + 1) % h;
  const int q1 = (b + h - 1) % h;
  const int q3 = (b + 1) % h;
  auto arc = [&](int from, int to) {
    std::vector<int> x;
    for (int k = from;; k = (k + 1) % h) {
      x.push_back(k);
      if (k == to) break;
    }
    return x;
  };
  std::vector<int> route{r};
  auto a3 = detail::consecutive_walk(s, arc(q3, p1));
  route.insert(route.end(), a3.begin(), a3.end());
  auto x1 = arc(p2, q1);
  std::reverse(x1.begin(), x1.end());
  auto a1 = detail::consecutive_walk(s, x1);
  route.insert(route.end(), a1.begin(), a1.end());
  route.push_back(b);
  return make_route(s, RouteKind::Path, std::move(route));
}

/// Interval tables of the fixed-target dynamic program.  Positions are in a
/// frame rotated so that the target t sits at position T = h-1 and the
/// positions after it repeat the sequence once more; entry (i, j) with
/// 0 <= i <= T <= j <= i+T describes the clockwise interval [i..j].
struct DPTables {
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;
  enum Choice : std::uint8_t { None = 0, Base = 1, FirstPair = 2, FarPair = 3 };

  int h = 0;
  int target = -1;
  int first_row = 0;  // smallest i computed
  std::vector<int> cross1;  // path from i to t
  std::vector<int> cross2;  // path from j to t
  std::vector<std::uint8_t> choice1;
  std::vector<std::uint8_t> choice2;

  int T() const noexcept { return h - 1; }
  int original(int p) const noexcept { return (target + 1 + p) % h; }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 + static_cast<std::size_t>(j - T());
  }
  bool valid(int i, int j) const noexcept { return i >= first_row && i <= T() && j >= T() && j <= i + T(); }

  /// Optimum crossings from interval end p_i (or p_j) to the target on the
  /// clockwise interval [p_i..p_j] of original indices, if computed.
  std::optional<int> from_start(int pi, int pj) const { return lookup(cross1, pi, pj); }
  std::optional<int> from_end(int pi, int pj) const { return lookup(cross2, pi, pj); }

 private:
  std::optional<int> lookup(const std::vector<int>& tab, int pi, int pj) const {
    const int i = (pi - target - 1 + 2 * h) % h;
    const int j = T() + (pj - target + h) % h;
    if (pi == target) {
      if (pj != target) return std::nullopt;
      return 0;
    }
    if (!valid(i, j)) return std::nullopt;
    const int v = tab[index(i, j)];
    if (v >= kInf) return std::nullopt;
    return v;
  }
};

namespace detail {

struct DPFrame {
  int h, T;
  std::vector<int> sg;   // +1 red, -1 blue, positions 0..2h-2
  std::vector<int> pre;  // prefix balance, size 2h-1+1
  std::vector<int> chg;  // chg[p] = color changes between consecutive positions < p
  // Searches over prefix values.
  std::vector<int> prev_eq, prev_plus, prev_minus;  // indexed by j
  std::vector<int> next_eq, next_plus, next_minus;  // indexed by i

  int changes(int a, int b) const { return chg[static_cast<std::size_t>(b)] - chg[static_cast<std::size_t>(a)]; }
  int balance(int a, int b) const { return pre[static_cast<std::size_t>(b) + 1] - pre[static_cast<std::size_t>(a)]; }
  int c(int p) const { return sg[static_cast<std::size_t>(p)]; }

  // Interval [a..b] read cyclically, ends a and b.
  std::optional<int> interval_cost(int a, int b, int from_end_sign, int to_end_sign) const {
    const int size = b - a + 1;
    const int ch = size == 1 ? 0 : changes(a, b) + (c(a) != c(b));
    return consecutive_cost(size, balance(a, b), ch, from_end_sign, to_end_sign);
  }
};

inline DPFrame make_frame(const BicoloredSet& s, int t) {
  DPFrame f;
  f.h = s.size();
  f.T = f.h - 1;
  const int len = 2 * f.h - 1;
  f.sg.resize(static_cast<std::size_t>(len));
  for (int p = 0; p < len; ++p) f.sg[static_cast<std::size_t>(p)] = sign_of(s.color((t + 1 + p) % f.h));
  f.pre.assign(static_cast<std::size_t>(len) + 1, 0);
  for (int p = 0; p < len; ++p) f.pre[static_cast<std::size_t>(p) + 1] = f.pre[static_cast<std::size_t>(p)] + f.sg[static_cast<std::size_t>(p)];
  f.chg.assign(static_cast<std::size_t>(len), 0);
  for (int p = 1; p < len; ++p)
    f.chg[static_cast<std::size_t>(p)] = f.chg[static_cast<std::size_t>(p) - 1] + (f.sg[static_cast<std::size_t>(p) - 1] != f.sg[static_cast<std::size_t>(p)]);

  const int off = len + 1;
  std::vector<int> last(2 * static_cast<std::size_t>(len) + 3, -1);
  auto slot = [&](int v) -> int& { return last[static_cast<std::size_t>(v + off)]; };
  f.prev_eq.assign(static_cast<std::size_t>(len), -1);
  f.prev_plus.assign(static_cast<std::size_t>(len), -1);
  f.prev_minus.assign(static_cast<std::size_t>(len), -1);
  // After visiting prefix positions 0..j, answer queries about pre[j+1].
  for (int j = 0; j < len; ++j) {
    slot(f.pre[static_cast<std::size_t>(j)]) = j;
    const int v = f.pre[static_cast<std::size_t>(j) + 1];
    f.prev_eq[static_cast<std::size_t>(j)] = slot(v);
    f.prev_plus[static_cast<std::size_t>(j)] = slot(v + 1);
    f.prev_minus[static_cast<std::size_t>(j)] = slot(v - 1);
  }
  std::fill(last.begin(), last.end(), -1);
  f.next_eq.assign(static_cast<std::size_t>(len), -1);
  f.next_plus.assign(static_cast<std::size_t>(len), -1);
  f.next_minus.assign(static_cast<std::size_t>(len), -1);
  // Smallest q >= i+1 with pre[q] equal to pre[i] (+/- 1).
  for (int i = len - 1; i >= 0; --i) {
    slot(f.pre[static_cast<std::size_t>(i) + 1]) = i + 1;
    const int v = f.pre[static_cast<std::size_t>(i)];
    f.next_eq[static_cast<std::size_t>(i)] = slot(v);
    f.next_plus[static_cast<std::size_t>(i)] = slot(v + 1);
    f.next_minus[static_cast<std::size_t>(i)] = slot(v - 1);
  }
  return f;
}

}  // namespace detail

/// Fills the interval tables for target t, for every start at or after
/// rotated position `s` (all starts when s == t).
inline DPTables path_tables(const BicoloredSet& s, int src, int t) {
  detail::require_convex(s);
  if (t < 0 || t >= s.size() || src < 0 || src >= s.size()) throw PreconditionViolated("endpoint out of range");
  using detail::DPFrame;
  const int h = s.size();
  const DPFrame f = detail::make_frame(s, t);
  const int T = f.T;
  DPTables tab;
  tab.h = h;
  tab.target = t;
  tab.first_row = src == t ? 0 : (src - t - 1 + 2 * h) % h;
  const std::size_t cells = static_cast<std::size_t>(T + 1) * static_cast<std::size_t>(T + 2) / 2;
  tab.cross1.assign(cells, DPTables::kInf);
  tab.cross2.assign(cells, DPTables::kInf);
  tab.choice1.assign(cells, DPTables::None);
  tab.choice2.assign(cells, DPTables::None);
  const int jmax_all = tab.first_row + T;
  const int st = f.c(T);
  auto fin = [](std::optional<int> v) { return v ? *v : DPTables::kInf; };

  for (int i = T; i >= tab.first_row; --i) {
    const int jmax = std::min(i + T, jmax_all);
    for (int j = T; j <= jmax; ++j) {
      const std::size_t at = tab.index(i, j);
      // Cross1: from i to t on [i..j].
      if (i == T) {
        if (j == T) {
          tab.cross1[at] = 0;
          tab.choice1[at] = DPTables::Base;
        }
      } else if (i + 1 == T || j == T) {
        tab.cross1[at] = fin(f.interval_cost(i, j, f.c(i), st));
        if (tab.cross1[at] < DPTables::kInf) tab.choice1[at] = DPTables::Base;
      } else {
        int best = DPTables::kInf;
        std::uint8_t how = DPTables::None;
        const int q = f.next_eq[static_cast<std::size_t>(i)] - 1;  // first balance point clockwise
        if (q > i && q < T) {
          const int a = fin(f.interval_cost(i, q, f.c(i), f.c(q)));
          const int b = tab.cross1[tab.index(q, j)];
          if (a < DPTables::kInf && b < DPTables::kInf && a + b < best) {
            best = a + b;
            how = DPTables::FirstPair;
          }
        }
        // First point m counterclockwise from j with {i} + [m..j] balanced.
        const int m = f.c(i) > 0 ? f.prev_plus[static_cast<std::size_t>(j)] : f.prev_minus[static_cast<std::size_t>(j)];
        if (m >= T + 1 && m <= j) {
          const int size = j - m + 2;
          const int ch = f.changes(m, j) + (f.c(i) != f.c(m)) + (f.c(i) != f.c(j));
          const int a = fin(detail::consecutive_cost(size, f.balance(m, j) + f.c(i), ch, f.c(i), f.c(m)));
          const int b = tab.cross2[tab.index(i + 1, m)];
          if (a < DPTables::kInf && b < DPTables::kInf && a + b < best) {
            best = a + b;
            how = DPTables::FarPair;
          }
        }
        tab.cross1[at] = best;
        tab.choice1[at] = how;
      }
      // Cross2: from j to t on [i..j].
      if (j == T) {
        if (i == T) {
          tab.cross2[at] = 0;
          tab.choice2[at] = DPTables::Base;
        }
      } else if (j - 1 == T || i == T) {
        tab.cross2[at] = fin(f.interval_cost(i, j, f.c(j), st));
        if (tab.cross2[at] < DPTables::kInf) tab.choice2[at] = DPTables::Base;
      } else {
        int best = DPTables::kInf;
        std::uint8_t how = DPTables::None;
        const int q = f.prev_eq[static_cast<std::size_t>(j)];  // first balance point counterclockwise
        if (q >= T + 1 && q < j) {
          const int a = fin(f.interval_cost(q, j, f.c(j), f.c(q)));
          const int b = tab.cross2[tab.index(i, q)];
          if (a < DPTables::kInf && b < DPTables::kInf && a + b < best) {
            best = a + b;
            how = DPTables::FirstPair;
          }
        }
        // First point m clockwise from i with {j} + [i..m] balanced.
        const int m1 = (f.c(j) > 0 ? f.next_minus[static_cast<std::size_t>(i)] : f.next_plus[static_cast<std::size_t>(i)]);
        const int m = m1 - 1;
        if (m1 >= 0 && m >= i && m <= T - 1) {
          const int size = m - i + 2;
          const int ch = f.changes(i, m) + (f.c(j) != f.c(i)) + (f.c(j) != f.c(m));
          const int a = fin(detail::consecutive_cost(size, f.balance(i, m) + f.c(j), ch, f.c(j), f.c(m)));
          const int b = tab.cross1[tab.index(m, j - 1)];
          if (a < DPTables::kInf && b < DPTables::kInf && a + b < best) {
            best = a + b;
            how = DPTables::FarPair;
          }
        }
        tab.cross2[at] = best;
        tab.choice2[at] = how;
      }
    }
  }
  return tab;
}

namespace detail {

inline void append_walk(std::vector<int>& route, const std::vector<int>& piece) {
  auto it = piece.begin();
  if (!route.empty() && !piece.empty() && route.back() == piece.front()) ++it;
  route.insert(route.end(), it, piece.end());
}

inline std::vector<int> reconstruct(const BicoloredSet& s, const DPTables& tab, int i, int j) {
  const int T = tab.T();
  std::vector<int> route;
  auto seq = [&](std::initializer_list<std::pair<int, int>> runs) {
    // Each pair is a run of rotated positions from a to b (step +1 or -1).
    std::vector<int> x;
    for (auto [a, b] : runs) {
      const int step = a <= b ? 1 : -1;
      for (int p = a;; p += step) {
        x.push_back(tab.original(p));
        if (p == b) break;
      }
    }
    return x;
  };
  bool first_table = true;
  while (true) {
    const std::size_t at = tab.index(i, j);
    const std::uint8_t how = first_table ? tab.choice1[at] : tab.choice2[at];
    if (how == DPTables::None) throw InternalError("dynamic program: unreachable entry");
    if (first_table) {
      if (how == DPTables::Base) {
        if (i == T) {
          append_walk(route, {tab.original(T)});
        } else if (j == T) {
          append_walk(route, consecutive_walk(s, seq({{i, j}})));
        } else {
          append_walk(route, consecutive_walk(s, seq({{i, i}, {j, i + 1}})));
        }
        return route;
      }
      if (how == DPTables::FirstPair) {
        // Not stored: recompute the balance point.
        int q = i + 1, bal = 0;
        for (int p = i;; ++p) {
          bal += detail::sign_of(s.color(tab.original(p)));
          if (bal == 0) {
            q = p;
            break;
          }
        }
        append_walk(route, consecutive_walk(s, seq({{i, q}})));
        i = q;
        continue;
      }
      int m = j, bal = detail::sign_of(s.color(tab.original(i)));
      for (int p = j;; --p) {
        bal += detail::sign_of(s.color(tab.original(p)));
        if (bal == 0) {
          m = p;
          break;
        }
      }
      append_walk(route, consecutive_walk(s, seq({{i, i}, {j, m}})));
      i = i + 1;
      j = m;
      first_table = false;
      continue;
    }
    if (how == DPTables::Base) {
      if (j == T) {
        append_walk(route, {tab.original(T)});
      } else if (i == T) {
        append_walk(route, consecutive_walk(s, seq({{j, i}})));
      } else {
        append_walk(route, consecutive_walk(s, seq({{j, j}, {i, j - 1}})));
      }
      return route;
    }
    if (how == DPTables::FirstPair) {
      int q = j - 1, bal = 0;
      for (int p = j;; --p) {
        bal += detail::sign_of(s.color(tab.original(p)));
        if (bal == 0) {
          q = p;
          break;
        }
      }
      append_walk(route, consecutive_walk(s, seq({{j, q}})));
      j = q;
      continue;
    }
    int m = i, bal = detail::sign_of(s.color(tab.original(j)));
    for (int p = i;; ++p) {
      bal += detail::sign_of(s.color(tab.original(p)));
      if (bal == 0) {
        m = p;
        break;
      }
    }
    append_walk(route, consecutive_walk(s, seq({{j, j}, {i, m}})));
    i = m;
    j = j - 1;
    first_table = true;
  }
}

}  // namespace detail

/// Minimum-crossing Hamiltonian alternating path from s to t.
inline AltRoute optimum_path(const BicoloredSet& s, int src, int t) {
  detail::require_convex(s);
  detail::check_path_counts(s, src, t);
  const int h = s.size();
  if (h == 1) return make_route(s, RouteKind::Path, {src});
  if ((src + 1) % h == t || (t + 1) % h == src) return optimum_path_consecutive(s, src, t);
  if (s.color(src) != s.color(t) && is_special(s, src, t)) return optimum_path_special(s, src, t);
  const DPTables tab = path_tables(s, src, t);
  const int i = tab.first_row;
  const int j = i + tab.T();
  if (tab.cross1[tab.index(i, j)] >= DPTables::kInf) throw InternalError("dynamic program found no path");
  return make_route(s, RouteKind::Path, detail::reconstruct(s, tab, i, j));
}

}  // namespace bicolor

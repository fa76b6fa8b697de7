#pragma once
// Instance and route text formats, plus the seeded instance generators.
//
// Instance file, one record per line, '#' starts a comment:
//   x y R|B              a point (general-position mode)
//   convex: RRBBRB       colors of a convex set, clockwise
//   endpoints: i j       optional, 1-based
// Route file: a `path` or `cycle` header followed by 1-based indices.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/route.hpp"

namespace bicolor {

struct Instance {
  std::vector<ColoredPoint> points;  // empty in convex form
  std::string convex;                // color string in convex form
  std::optional<std::pair<int, int>> endpoints;  // 0-based

  bool is_convex() const noexcept { return !convex.empty(); }
  int size() const noexcept { return is_convex() ? static_cast<int>(convex.size()) : static_cast<int>(points.size()); }
};

namespace detail {

class LineCursor {
 public:
  LineCursor(std::string_view line, int number) : s_(line), line_(number) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  int column() const noexcept { return static_cast<int>(pos_) + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column()); }

  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    const char* b = s_.data() + pos_;
    auto [p, ec] = std::from_chars(b, s_.data() + s_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc() || p == b) fail("expected an integer");
    pos_ += static_cast<std::size_t>(p - b);
    return v;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("unexpected end of line");
    return s_.substr(start, pos_ - start);
  }

  void rewind_to(int column) { pos_ = static_cast<std::size_t>(column - 1); }
  void advance(std::size_t k) { pos_ = std::min(s_.size(), pos_ + k); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  int line_;
};

inline Color color_token(LineCursor& c) {
  const int col = c.column();
  auto w = c.word();
  if (w == "R" || w == "r") return Color::Red;
  if (w == "B" || w == "b") return Color::Blue;
  c.rewind_to(col);
  c.skip_space();
  c.fail("color must be R or B");
}

inline std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

inline bool starts_with_key(std::string_view line, std::string_view key) {
  std::size_t i = 0;
  while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  return line.substr(i, key.size()) == key;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text) {
  Instance inst;
  std::optional<std::pair<int, int>> one_based;
  int ends_line = 0;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = nl + 1;
    ++number;
    const auto line = detail::strip_comment(raw);
    detail::LineCursor cur(line, number);
    if (cur.done()) continue;

    if (detail::starts_with_key(line, "convex:")) {
      if (!inst.points.empty() || inst.is_convex()) cur.fail("a convex line cannot be combined with other point records");
      cur.skip_space();
      cur.advance(7);
      const int col = cur.column();
      if (cur.done()) cur.fail("empty convex color string");
      cur.rewind_to(col);
      auto w = cur.word();
      for (std::size_t k = 0; k < w.size(); ++k)
        if (w[k] != 'R' && w[k] != 'B') {
          cur.rewind_to(col);
          cur.skip_space();
          throw ParseError("convex strings contain only R and B", number, cur.column() + static_cast<int>(k));
        }
      inst.convex = std::string(w);
      if (!cur.done()) cur.fail("trailing characters");
      continue;
    }
    if (detail::starts_with_key(line, "endpoints:")) {
      if (one_based) cur.fail("endpoints given twice");
      cur.skip_space();
      cur.advance(10);
      const int i = static_cast<int>(cur.integer());
      const int j = static_cast<int>(cur.integer());
      if (!cur.done()) cur.fail("trailing characters");
      one_based = std::make_pair(i, j);
      ends_line = number;
      continue;
    }
    if (inst.is_convex()) cur.fail("a point record cannot follow a convex line");
    ColoredPoint p;
    p.x = cur.integer();
    p.y = cur.integer();
    p.color = detail::color_token(cur);
    if (!cur.done()) cur.fail("trailing characters");
    inst.points.push_back(p);
  }
  if (!inst.is_convex() && inst.points.empty()) throw ParseError("no points", number, 1);
  if (one_based) {
    const int n = inst.size();
    auto [i, j] = *one_based;
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError("endpoint index out of range", ends_line, 1);
    inst.endpoints = std::make_pair(i - 1, j - 1);
  }
  return inst;
}

inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  if (inst.is_convex()) {
    out << "convex: " << inst.convex << '\n';
  } else {
    for (const auto& p : inst.points) out << p.x << ' ' << p.y << ' ' << (p.color == Color::Red ? 'R' : 'B') << '\n';
  }
  if (inst.endpoints) out << "endpoints: " << inst.endpoints->first + 1 << ' ' << inst.endpoints->second + 1 << '\n';
  return out.str();
}

/// Builds the set; point lists are checked for general position.
inline BicoloredSet to_set(const Instance& inst) {
  if (inst.is_convex()) return BicoloredSet::convex_sequence(inst.convex);
  return BicoloredSet::general_position(inst.points);
}

// Point-list instances in convex position can be solved as color sequences.
// position[k] is the input index of sequence position k (clockwise).
struct ConvexView {
  BicoloredSet set;
  std::vector<int> position;
};

inline ConvexView convex_view(const Instance& inst) {
  if (inst.is_convex()) {
    std::vector<int> id(inst.convex.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
    return {BicoloredSet::convex_sequence(inst.convex), std::move(id)};
  }
  auto s = BicoloredSet::general_position(inst.points);
  if (static_cast<int>(s.hull().size()) != s.size()) throw PreconditionViolated("points are not in convex position");
  std::vector<int> cw(s.hull().rbegin(), s.hull().rend());
  std::string colors;
  for (int v : cw) colors.push_back(s.color(v) == Color::Red ? 'R' : 'B');
  return {BicoloredSet::convex_sequence(colors), std::move(cw)};
}

inline std::string format_route(const AltRoute& r) {
  std::ostringstream out;
  out << kind_name(r.kind) << '\n';
  for (std::size_t k = 0; k < r.vertices.size(); ++k) out << (k ? " " : "") << r.vertices[k] + 1;
  out << '\n';
  return out.str();
}

inline AltRoute parse_route(std::string_view text) {
  AltRoute r;
  bool have_kind = false;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    const auto line = detail::strip_comment(text.substr(start, nl - start));
    start = nl + 1;
    ++number;
    detail::LineCursor cur(line, number);
    while (!cur.done()) {
      if (!have_kind) {
        const int col = cur.column();
        auto w = cur.word();
        if (w == "path") {
          r.kind = RouteKind::Path;
        } else if (w == "cycle") {
          r.kind = RouteKind::Cycle;
        } else {
          cur.rewind_to(col);
          cur.skip_space();
          cur.fail("route must start with `path` or `cycle`");
        }
        have_kind = true;
        continue;
      }
      const int col = cur.column();
      const auto v = cur.integer();
      if (v < 1 || v > (std::int64_t{1} << 30)) {
        cur.rewind_to(col);
        cur.skip_space();
        cur.fail("indices are 1-based");
      }
      r.vertices.push_back(static_cast<int>(v) - 1);
    }
  }
  if (!have_kind) throw ParseError("missing route header", number, 1);
  return r;
}

// ---- generators -------------------------------------------------------

namespace detail {

// Uniform integer in [lo, hi] straight from the engine, so output does not
// depend on the standard library's distribution implementations.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline void shuffle_string(std::string& s, std::mt19937_64& rng) {
  for (std::size_t i = s.size(); i > 1; --i) std::swap(s[i - 1], s[static_cast<std::size_t>(rng() % i)]);
}

inline void resample_degenerate(std::vector<ColoredPoint>& pts, std::mt19937_64& rng, std::int64_t bbox) {
  for (int round = 0; round < 10000; ++round) {
    auto t = find_collinear_triple(std::span<const ColoredPoint>(pts));
    if (!t) return;
    auto& p = pts[static_cast<std::size_t>(t->back())];
    p.x = draw(rng, -bbox, bbox);
    p.y = draw(rng, -bbox, bbox);
  }
  throw DegenerateInput("could not sample a point set in general position; enlarge the bounding box");
}

}  // namespace detail

/// n red and n blue points, uniform in [-bbox, bbox]^2.
inline Instance random_general(int n, std::uint64_t seed, std::int64_t bbox = std::int64_t{1} << 20) {
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  if (bbox < 2 || bbox >= kCoordinateLimit) throw PreconditionViolated("bounding box out of range");
  std::mt19937_64 rng(seed);
  Instance inst;
  for (int i = 0; i < 2 * n; ++i)
    inst.points.push_back({detail::draw(rng, -bbox, bbox), detail::draw(rng, -bbox, bbox), i < n ? Color::Red : Color::Blue});
  detail::resample_degenerate(inst.points, rng, bbox);
  return inst;
}

/// A uniformly shuffled balanced color sequence of length 2n.
inline Instance convex_random(int n, std::uint64_t seed) {
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  std::mt19937_64 rng(seed);
  Instance inst;
  inst.convex = std::string(static_cast<std::size_t>(n), 'R') + std::string(static_cast<std::size_t>(n), 'B');
  detail::shuffle_string(inst.convex, rng);
  return inst;
}

namespace detail {

class PatternParser {
 public:
  explicit PatternParser(std::string_view p) : p_(p) {}

  std::string run() {
    auto out = sequence();
    if (i_ < p_.size()) fail("unexpected character");
    if (out.empty()) fail("empty pattern");
    return out;
  }

 private:
  static constexpr std::size_t kMaxLength = std::size_t{1} << 26;

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidPattern(what + " at position " + std::to_string(i_ + 1) + " in \"" + std::string(p_) + "\"");
  }

  std::string sequence() {
    std::string out;
    while (i_ < p_.size() && p_[i_] != ')') {
      std::string item;
      const char c = p_[i_];
      if (c == 'R' || c == 'B') {
        item = std::string(1, c);
        ++i_;
      } else if (c == '(') {
        ++i_;
        item = sequence();
        if (i_ >= p_.size() || p_[i_] != ')') fail("missing ')'");
        if (item.empty()) fail("empty group");
        ++i_;
      } else {
        fail("unexpected character");
      }
      const std::size_t k = count();
      if (item.size() * k > kMaxLength || out.size() + item.size() * k > kMaxLength) fail("pattern too long");
      for (std::size_t r = 0; r < k; ++r) out += item;
    }
    return out;
  }

  std::size_t count() {
    if (i_ < p_.size() && (p_[i_] == 'x' || p_[i_] == '*')) {
      ++i_;
      if (i_ >= p_.size() || !std::isdigit(static_cast<unsigned char>(p_[i_]))) fail("expected a repeat count");
    }
    if (i_ >= p_.size() || !std::isdigit(static_cast<unsigned char>(p_[i_]))) return 1;
    std::size_t k = 0;
    while (i_ < p_.size() && std::isdigit(static_cast<unsigned char>(p_[i_]))) {
      k = k * 10 + static_cast<std::size_t>(p_[i_] - '0');
      if (k > kMaxLength) fail("repeat count too large");
      ++i_;
    }
    if (k == 0) fail("repeat count must be positive");
    return k;
  }

  std::string_view p_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Expands a run-length pattern such as R5B5, RBRRB or (RB)25 into a convex
/// instance.
inline Instance runs(std::string_view pattern) {
  Instance inst;
  inst.convex = detail::PatternParser(pattern).run();
  return inst;
}

/// n points of `hull_color` on a large circle and n of the other color on a
/// small concentric one.
inline Instance nested(Color hull_color, int n, std::uint64_t seed = 1) {
  if (n < 1) throw PreconditionViolated("n must be at least 1");
  if (n > 2000) throw TooLarge("nested family limited to 2000 points per color");
  std::mt19937_64 rng(seed);
  const double outer = 1 << 24;
  const double inner = outer / 8;
  Instance inst;
  auto ring = [&](double radius, double phase, Color c) {
    for (int k = 0; k < n; ++k) {
      const double a = phase + 2 * std::numbers::pi * k / n;
      inst.points.push_back({std::llround(radius * std::cos(a)), std::llround(radius * std::sin(a)), c});
    }
  };
  ring(outer, 0.0, hull_color);
  ring(inner, 0.5 + 1.0 / (n + 2), opposite(hull_color));
  for (int round = 0; round < 10000; ++round) {
    auto t = find_collinear_triple(std::span<const ColoredPoint>(inst.points));
    if (!t) {
      auto s = BicoloredSet::general_position(inst.points);
      if (static_cast<int>(s.hull().size()) == n && s.runs().runs_of(opposite(hull_color)) == 0) return inst;
      break;
    }
    auto& p = inst.points[static_cast<std::size_t>(t->back())];
    p.x += detail::draw(rng, -2, 2);
    p.y += detail::draw(rng, -2, 2);
  }
  throw DegenerateInput("could not place the nested family in general position");
}

}  // namespace bicolor

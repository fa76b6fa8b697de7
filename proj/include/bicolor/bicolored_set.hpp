#pragma once
/**
 * Red/blue point sets, their hull runs, and the balance partitions around a
 * hull point.
 *
 * A set lives in one of two modes.  GeneralPosition sets carry real
 * coordinates with no three points collinear.  ConvexSequence sets are given
 * by a color string read in clockwise order; point k is the k-th character
 * and every combinatorial query works on indices.  Coordinates on a large
 * circle are synthesized for those sets, but only rendering and the
 * general-position builder ever look at them.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bicolor/errors.hpp"
#include "bicolor/geometry.hpp"

namespace bicolor {

enum class PositionMode : std::uint8_t { GeneralPosition, ConvexSequence };

// A maximal block of same-colored consecutive boundary points, given as
// `length` positions of the boundary order starting at `start` (cyclic).
struct Run {
  Color color;
  int start;
  int length;
};

struct RunStructure {
  std::vector<Run> runs;
  int red_runs = 0;
  int blue_runs = 0;
  // Bichromatic boundary-adjacent pairs, in boundary order.
  std::vector<std::pair<int, int>> bridges;

  int runs_of(Color c) const noexcept { return c == Color::Red ? red_runs : blue_runs; }
};

namespace detail {

inline std::vector<Color> colors_from_string(std::string_view s) {
  std::vector<Color> out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == 'R' || ch == 'r') out.push_back(Color::Red);
    else if (ch == 'B' || ch == 'b') out.push_back(Color::Blue);
    else throw PreconditionViolated(std::string("color sequence may contain only R and B, got '") + ch + "'");
  }
  return out;
}

}  // namespace detail

class BicoloredSet {
 public:
  static constexpr std::int64_t kCircleRadius = std::int64_t{1} << 30;

  /// Points in general position; duplicates and collinear triples are rejected.
  static BicoloredSet general_position(std::vector<ColoredPoint> points) {
    if (points.empty()) throw PreconditionViolated("empty point set");
    for (const auto& p : points) detail::check_coordinate_range(p);
    std::span<const ColoredPoint> view(points);
    if (auto t = find_collinear_triple(view)) throw DegenerateInput(detail::triple_message(*t));
    BicoloredSet s;
    s.points_ = std::move(points);
    s.mode_ = PositionMode::GeneralPosition;
    s.hull_ = detail::hull_of(std::span<const ColoredPoint>(s.points_), std::span<const int>(s.all_ids()));
    s.boundary_ = s.hull_;
    s.finish();
    return s;
  }

  /// Points in convex position, colors listed clockwise.
  static BicoloredSet convex_sequence(std::vector<Color> colors) {
    if (colors.empty()) throw PreconditionViolated("empty color sequence");
    BicoloredSet s;
    s.mode_ = PositionMode::ConvexSequence;
    const std::size_t h = colors.size();
    s.points_.resize(h);
    for (std::size_t k = 0; k < h; ++k) {
      const double angle = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(h);
      s.points_[k] = {std::llround(kCircleRadius * std::cos(angle)), std::llround(kCircleRadius * std::sin(angle)),
                      colors[k]};
    }
    s.boundary_.resize(h);
    for (std::size_t k = 0; k < h; ++k) s.boundary_[k] = static_cast<int>(k);
    s.hull_.assign(s.boundary_.rbegin(), s.boundary_.rend());
    if (h > 1) std::rotate(s.hull_.begin(), s.hull_.end() - 1, s.hull_.end());
    s.finish();
    return s;
  }

  static BicoloredSet convex_sequence(std::string_view colors) {
    return convex_sequence(detail::colors_from_string(colors));
  }

  int size() const noexcept { return static_cast<int>(points_.size()); }
  PositionMode mode() const noexcept { return mode_; }
  bool is_convex() const noexcept { return mode_ == PositionMode::ConvexSequence; }

  const ColoredPoint& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
  Color color(int i) const { return points_[static_cast<std::size_t>(i)].color; }
  std::span<const ColoredPoint> points() const noexcept { return points_; }

  int count(Color c) const noexcept { return c == Color::Red ? red_count_ : blue_count_; }
  int red_count() const noexcept { return red_count_; }
  int blue_count() const noexcept { return blue_count_; }

  // Counterclockwise hull vertices.
  const std::vector<int>& hull() const noexcept { return hull_; }
  // Boundary points in the order runs and bridges are reported: clockwise
  // index order for convex sequences, counterclockwise hull order otherwise.
  const std::vector<int>& boundary_order() const noexcept { return boundary_; }
  bool on_hull(int i) const { return run_id_.at(static_cast<std::size_t>(i)) >= 0; }
  // Circular run number of a boundary point, -1 for interior points.
  int run_id(int i) const { return run_id_.at(static_cast<std::size_t>(i)); }
  const RunStructure& runs() const noexcept { return runs_; }

  /// Neighbors of a boundary point, as (counterclockwise predecessor, successor).
  std::pair<int, int> hull_neighbors(int i) const {
    const int pos = hull_pos_.at(static_cast<std::size_t>(i));
    if (pos < 0) throw PreconditionViolated("point " + std::to_string(i) + " is not on the hull");
    const int m = static_cast<int>(hull_.size());
    return {hull_[static_cast<std::size_t>((pos + m - 1) % m)], hull_[static_cast<std::size_t>((pos + 1) % m)]};
  }

  bool hull_adjacent(int a, int b) const {
    if (!on_hull(a) || !on_hull(b) || a == b) return false;
    auto [prev, next] = hull_neighbors(a);
    return prev == b || next == b;
  }

  /// Angular order of every other point around the boundary point `center`.
  std::vector<int> radial_sequence(int center, Rotation dir) const {
    if (!on_hull(center)) throw PreconditionViolated("center " + std::to_string(center) + " is not on the hull");
    const int h = size();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(h - 1));
    if (is_convex()) {
      // Seen from a vertex of a convex polygon listed clockwise, the sweep
      // in a given rotation follows the boundary in that rotation.
      const int step = dir == Rotation::Clockwise ? 1 : h - 1;
      for (int k = 1, v = (center + step) % h; k < h; ++k, v = (v + step) % h) out.push_back(v);
      return out;
    }
    std::vector<int> ids;
    ids.reserve(static_cast<std::size_t>(h - 1));
    for (int i = 0; i < h; ++i)
      if (i != center) ids.push_back(i);
    return detail::radial_order_of(points(), std::span<const int>(ids), points_[static_cast<std::size_t>(center)], dir);
  }

  std::string color_string() const {
    std::string s;
    s.reserve(points_.size());
    for (const auto& p : points_) s.push_back(color_letter(p.color));
    return s;
  }

  std::vector<int> all_ids() const {
    std::vector<int> ids(points_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return ids;
  }

 private:

  void finish() {
    red_count_ = blue_count_ = 0;
    for (const auto& p : points_) (p.color == Color::Red ? red_count_ : blue_count_)++;
    run_id_.assign(points_.size(), -1);
    hull_pos_.assign(points_.size(), -1);
    for (std::size_t k = 0; k < hull_.size(); ++k) hull_pos_[static_cast<std::size_t>(hull_[k])] = static_cast<int>(k);

    const int m = static_cast<int>(boundary_.size());
    auto col = [&](int pos) { return points_[static_cast<std::size_t>(boundary_[static_cast<std::size_t>(((pos % m) + m) % m)])].color; };
    runs_ = RunStructure{};
    int first = -1;
    for (int k = 0; k < m; ++k)
      if (col(k) != col(k - 1)) {
        first = k;
        break;
      }
    if (first < 0) {
      runs_.runs.push_back({col(0), 0, m});
      (col(0) == Color::Red ? runs_.red_runs : runs_.blue_runs) = 1;
      for (int k = 0; k < m; ++k) run_id_[static_cast<std::size_t>(boundary_[static_cast<std::size_t>(k)])] = 0;
      return;
    }
    for (int k = 0; k < m; ++k) {
      const int pos = first + k;
      if (k == 0 || col(pos) != col(pos - 1)) {
        runs_.runs.push_back({col(pos), pos % m, 0});
        (col(pos) == Color::Red ? runs_.red_runs : runs_.blue_runs)++;
      }
      runs_.runs.back().length++;
      run_id_[static_cast<std::size_t>(boundary_[static_cast<std::size_t>(pos % m)])] =
          static_cast<int>(runs_.runs.size()) - 1;
    }
    for (int k = 0; k < m; ++k)
      if (col(k) != col(k + 1))
        runs_.bridges.emplace_back(boundary_[static_cast<std::size_t>(k)],
                                   boundary_[static_cast<std::size_t>((k + 1) % m)]);
  }

  std::vector<ColoredPoint> points_;
  PositionMode mode_ = PositionMode::GeneralPosition;
  std::vector<int> hull_;
  std::vector<int> hull_pos_;
  std::vector<int> boundary_;
  std::vector<int> run_id_;
  RunStructure runs_;
  int red_count_ = 0;
  int blue_count_ = 0;
};

inline const RunStructure& run_structure(const BicoloredSet& s) { return s.runs(); }

/// The split of the points around a hull point `center` at the first
/// radial prefix that balances the colors (center included).
struct Partition {
  std::vector<int> s1;
  std::vector<int> s2;
  int p_i = -1;
  int p_next = -1;
  Rotation direction = Rotation::CounterClockwise;
  int center = -1;
};

// The first radial point already has the opposite color.
struct ImmediateNeighbor {
  int point = -1;
};

using PartitionResult = std::variant<Partition, ImmediateNeighbor>;

namespace detail {

// Scan of a radial sequence around `center`.  The caller guarantees the
// counts admit a balanced prefix.
inline PartitionResult partition_from_radial(std::span<const ColoredPoint> pts, std::vector<int> radial, int center,
                                             Rotation dir) {
  const Color cc = pts[static_cast<std::size_t>(center)].color;
  if (radial.empty()) throw PreconditionViolated("partition of an empty set");
  if (pts[static_cast<std::size_t>(radial[0])].color != cc) return ImmediateNeighbor{radial[0]};
  int delta = 1;
  for (std::size_t k = 0; k < radial.size(); ++k) {
    delta += pts[static_cast<std::size_t>(radial[k])].color == cc ? 1 : -1;
    if (delta == 0) {
      Partition p;
      p.s1.assign(radial.begin(), radial.begin() + static_cast<std::ptrdiff_t>(k));
      p.s2.assign(radial.begin() + static_cast<std::ptrdiff_t>(k), radial.end());
      p.p_i = radial[k - 1];
      p.p_next = radial[k];
      p.direction = dir;
      p.center = center;
      return p;
    }
  }
  throw InternalError("partition: no balanced radial prefix");
}

}  // namespace detail

/// Balance partition of S minus `center` around `center`.  Counts must be
/// balanced, or the center's color may lead by one when the last radial
/// point shares the center's color.
inline PartitionResult partition_around(const BicoloredSet& s, int center, Rotation dir) {
  if (center < 0 || center >= s.size()) throw PreconditionViolated("center index out of range");
  const Color cc = s.color(center);
  const int same = s.count(cc);
  const int other = s.count(opposite(cc));
  auto radial = s.radial_sequence(center, dir);
  if (radial.empty()) throw PreconditionViolated("partition needs at least two points");
  if (same == other + 1) {
    if (s.color(radial.back()) != cc)
      throw PreconditionViolated("partition: the last radial point must share the center's color");
  } else if (same != other) {
    throw PreconditionViolated("partition: color counts must be equal or lead by one for the center's color");
  }
  return detail::partition_from_radial(s.points(), std::move(radial), center, dir);
}

namespace detail {

inline bool ends_at(const PartitionResult& r, int target) {
  const auto* p = std::get_if<Partition>(&r);
  return p != nullptr && p->p_next == target;
}

}  // namespace detail

/// Whether (S, a, b) is a special configuration.  `a` and `b` must have
/// opposite colors, lie on the hull, and S must be color-balanced.
inline bool is_special(const BicoloredSet& s, int a, int b) {
  if (a < 0 || b < 0 || a >= s.size() || b >= s.size() || a == b)
    throw PreconditionViolated("special-configuration endpoints out of range");
  if (s.color(a) == s.color(b)) throw PreconditionViolated("special configuration needs opposite colors");
  if (s.red_count() != s.blue_count()) throw PreconditionViolated("special configuration needs balanced colors");
  if (!s.on_hull(a) || !s.on_hull(b)) throw PreconditionViolated("special-configuration endpoints must be on the hull");
  for (int v : {a, b}) {
    auto [prev, next] = s.hull_neighbors(v);
    if (s.color(prev) != s.color(v) || s.color(next) != s.color(v)) return false;
  }
  for (Rotation dir : {Rotation::Clockwise, Rotation::CounterClockwise}) {
    if (!detail::ends_at(partition_around(s, a, dir), b)) return false;
    if (!detail::ends_at(partition_around(s, b, dir), a)) return false;
  }
  return true;
}

}  // namespace bicolor

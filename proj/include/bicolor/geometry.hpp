#pragma once
/**
 * Exact planar predicates on integer coordinates.
 *
 * Coordinates are 64-bit integers bounded by kCoordinateLimit in absolute
 * value, so every determinant below fits in a signed 128-bit integer and no
 * predicate ever rounds.
 */

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bicolor/errors.hpp"

namespace bicolor {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) noexcept { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_letter(Color c) noexcept { return c == Color::Red ? 'R' : 'B'; }

enum class Rotation : std::uint8_t { Clockwise, CounterClockwise };

constexpr Rotation reversed(Rotation r) noexcept {
  return r == Rotation::Clockwise ? Rotation::CounterClockwise : Rotation::Clockwise;
}

constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 62;

struct ColoredPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  Color color = Color::Red;

  friend bool operator==(const ColoredPoint&, const ColoredPoint&) = default;
};

template <class P>
concept PlanarPoint = requires(const P& p) {
  { p.x } -> std::convertible_to<std::int64_t>;
  { p.y } -> std::convertible_to<std::int64_t>;
};

template <PlanarPoint P>
struct Segment {
  P a;
  P b;
};

// Vertex indices in counterclockwise order along the boundary of the hull.
struct Hull {
  std::vector<int> vertices;

  std::size_t size() const noexcept { return vertices.size(); }
  bool contains(int id) const { return std::find(vertices.begin(), vertices.end(), id) != vertices.end(); }
};

/// Sign of the exact determinant |b-a, c-a|; +1 is a left (counterclockwise) turn.
template <PlanarPoint P>
int orientation(const P& a, const P& b, const P& c) noexcept {
  const __int128 abx = static_cast<__int128>(b.x) - a.x;
  const __int128 aby = static_cast<__int128>(b.y) - a.y;
  const __int128 acx = static_cast<__int128>(c.x) - a.x;
  const __int128 acy = static_cast<__int128>(c.y) - a.y;
  const __int128 det = abx * acy - aby * acx;
  return (det > 0) - (det < 0);
}

template <PlanarPoint P>
bool same_position(const P& a, const P& b) noexcept {
  return a.x == b.x && a.y == b.y;
}

namespace detail {

// Is c strictly between a and b, given that the three are collinear.
template <PlanarPoint P>
bool strictly_between(const P& a, const P& b, const P& c) noexcept {
  if (a.x != b.x) return (a.x < c.x && c.x < b.x) || (b.x < c.x && c.x < a.x);
  return (a.y < c.y && c.y < b.y) || (b.y < c.y && c.y < a.y);
}

}  // namespace detail

/// True iff the two segments share a point in the relative interior of both.
template <PlanarPoint P>
bool segments_cross(const P& a, const P& b, const P& c, const P& d) noexcept {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: interiors overlap iff some endpoint lies strictly inside the
    // other segment, or the segments coincide.
    if (detail::strictly_between(a, b, c) || detail::strictly_between(a, b, d) ||
        detail::strictly_between(c, d, a) || detail::strictly_between(c, d, b))
      return true;
    return (same_position(a, c) && same_position(b, d)) || (same_position(a, d) && same_position(b, c));
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

template <PlanarPoint P>
bool segments_cross(const Segment<P>& s1, const Segment<P>& s2) noexcept {
  return segments_cross(s1.a, s1.b, s2.a, s2.b);
}

/// Finds three collinear points (or two coincident ones) among `pts`.
/// Runs in O(n^2 log n) by bucketing primitive directions per anchor point.
template <PlanarPoint P>
std::optional<std::vector<int>> find_collinear_triple(std::span<const P> pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, int>> dirs;
  for (int i = 0; i < n; ++i) {
    dirs.clear();
    for (int j = i + 1; j < n; ++j) {
      std::int64_t dx = pts[j].x - pts[i].x;
      std::int64_t dy = pts[j].y - pts[i].y;
      if (dx == 0 && dy == 0) return std::vector<int>{i, j};
      const std::int64_t g = std::gcd(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({{dx, dy}, j});
    }
    std::sort(dirs.begin(), dirs.end());
    for (std::size_t k = 1; k < dirs.size(); ++k)
      if (dirs[k].first == dirs[k - 1].first) return std::vector<int>{i, dirs[k - 1].second, dirs[k].second};
  }
  return std::nullopt;
}

namespace detail {

template <PlanarPoint P>
void check_coordinate_range(const P& p) {
  if (p.x <= -kCoordinateLimit || p.x >= kCoordinateLimit || p.y <= -kCoordinateLimit || p.y >= kCoordinateLimit)
    throw PreconditionViolated("coordinate magnitude must stay below 2^62");
}

// 1-based, as shown to users.
inline std::string triple_message(const std::vector<int>& t) {
  auto id = [&](std::size_t k) { return std::to_string(t[k] + 1); };
  if (t.size() == 2) return "points " + id(0) + " and " + id(1) + " coincide";
  return "points " + id(0) + ", " + id(1) + ", " + id(2) + " are collinear";
}

// Strict counterclockwise hull of the points selected by `ids`, as ids.
// Collinear boundary points are dropped; callers that assert general
// position never have any.
template <PlanarPoint P>
std::vector<int> hull_of(std::span<const P> pts, std::span<const int> ids) {
  std::vector<int> order(ids.begin(), ids.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  if (order.size() <= 2) {
    if (order.size() == 2 && same_position(pts[order[0]], pts[order[1]])) order.pop_back();
    return order;
  }
  std::vector<int> h(2 * order.size());
  std::size_t k = 0;
  for (int id : order) {
    while (k >= 2 && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[id]) <= 0) --k;
    h[k++] = id;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = order.size() - 1; i-- > 0;) {
    const int id = order[i];
    while (k >= lower && orientation(pts[h[k - 2]], pts[h[k - 1]], pts[id]) <= 0) --k;
    h[k++] = id;
  }
  h.resize(k - 1);
  return h;
}

// Visible arc of the ccw hull `h` from an outside point, in ccw order.
template <PlanarPoint P>
std::vector<int> visible_arc(std::span<const P> pts, std::span<const int> h, const P& x) {
  const std::size_t m = h.size();
  if (m == 0) return {};
  if (m == 1) {
    if (same_position(pts[h[0]], x)) throw PointInsideHull("point coincides with the hull");
    return {h[0]};
  }
  if (m == 2) {
    const int o = orientation(pts[h[0]], pts[h[1]], x);
    if (o == 0) {
      if (same_position(pts[h[0]], x) || same_position(pts[h[1]], x) ||
          strictly_between(pts[h[0]], pts[h[1]], x))
        throw PointInsideHull("point lies on the hull");
      throw DegenerateInput("point is collinear with a two-point hull");
    }
    return o < 0 ? std::vector<int>{h[0], h[1]} : std::vector<int>{h[1], h[0]};
  }
  std::vector<char> edge_visible(m);
  bool any = false;
  for (std::size_t k = 0; k < m; ++k) {
    const P& a = pts[h[k]];
    const P& b = pts[h[(k + 1) % m]];
    const int o = orientation(a, b, x);
    if (o == 0) {
      if (same_position(a, x) || same_position(b, x) || strictly_between(a, b, x))
        throw PointInsideHull("point lies on the hull boundary");
      throw DegenerateInput("point is collinear with a hull edge");
    }
    edge_visible[k] = o < 0;
    any = any || o < 0;
  }
  if (!any) throw PointInsideHull("point lies inside the hull");
  std::size_t start = 0;
  while (!(edge_visible[start] && !edge_visible[(start + m - 1) % m])) ++start;
  std::vector<int> arc{h[start]};
  for (std::size_t k = start; edge_visible[k % m]; ++k) arc.push_back(h[(k + 1) % m]);
  return arc;
}

// Angular order of `ids` around `center`, which must see them all within a
// wedge narrower than a half-turn.  Counterclockwise order starts at the
// point with every other point to its left.
template <PlanarPoint P>
std::vector<int> radial_order_of(std::span<const P> pts, std::span<const int> ids, const P& center, Rotation dir) {
  std::vector<int> order(ids.begin(), ids.end());
  if (order.empty()) return order;
  for (int id : order)
    if (same_position(pts[id], center)) throw DegenerateInput("radial order: point coincides with the center");
  // The comparator below is only a strict order once every point is known
  // to lie strictly left of the ray through the first one.
  int first = order[0];
  for (int id : order)
    if (orientation(center, pts[first], pts[id]) < 0) first = id;
  for (int id : order) {
    if (id == first) continue;
    const int o = orientation(center, pts[first], pts[id]);
    if (o == 0) throw DegenerateInput("radial order: two points are collinear with the center");
    if (o < 0) throw PreconditionViolated("radial order: center is not on the hull boundary");
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (a == b) return false;
    if (a == first) return true;
    if (b == first) return false;
    return orientation(center, pts[a], pts[b]) > 0;
  });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (orientation(center, pts[order[k - 1]], pts[order[k]]) == 0)
      throw DegenerateInput("radial order: two points are collinear with the center");
  if (dir == Rotation::Clockwise) std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace detail

/// Counterclockwise convex hull.  With `general_position` set, any collinear
/// triple among the input is rejected instead of silently dropped.
template <PlanarPoint P>
Hull convex_hull(std::span<const P> pts, bool general_position = true) {
  if (pts.empty()) throw PreconditionViolated("convex hull of an empty set");
  for (const auto& p : pts) detail::check_coordinate_range(p);
  if (general_position) {
    if (auto t = find_collinear_triple(pts)) throw DegenerateInput(detail::triple_message(*t));
  }
  std::vector<int> ids(pts.size());
  std::iota(ids.begin(), ids.end(), 0);
  return Hull{detail::hull_of(pts, std::span<const int>(ids))};
}

/// Indices of `pts` in angular order around `around`, which must lie on the
/// hull boundary of pts together with itself.
template <PlanarPoint P>
std::vector<int> radial_order(std::span<const P> pts, const P& around, Rotation dir) {
  std::vector<int> ids(pts.size());
  std::iota(ids.begin(), ids.end(), 0);
  return detail::radial_order_of(pts, std::span<const int>(ids), around, dir);
}

/// Hull vertices of `pts` visible from the outside point `x`, in
/// counterclockwise boundary order.
template <PlanarPoint P>
std::vector<int> visible_points(std::span<const P> pts, const P& x) {
  const Hull h = convex_hull(pts, false);
  return detail::visible_arc(pts, std::span<const int>(h.vertices), x);
}

/// The two hull vertices bounding the arc visible from `x`: first and last in
/// counterclockwise order.
template <PlanarPoint P>
std::pair<int, int> tangents_from(std::span<const P> pts, const P& x) {
  const auto arc = visible_points(pts, x);
  return {arc.front(), arc.back()};
}

}  // namespace bicolor

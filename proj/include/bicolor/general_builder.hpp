#pragma once
/**
 * 1-plane Hamiltonian alternating paths and cycles on point sets in general
 * position, by the recursive construction on hulls, visibility and radial
 * partitions.  Paths between opposite colors on a balanced set get at most
 * n - r(S) crossings; paths between two points of the color with one extra
 * point get at most (minority count) - (minority runs); cycles get at most
 * n - max(r(S), b(S)).
 *
 * Subsets are plain index vectors into the point span; every step recomputes
 * the hulls and radial orders it needs, so the whole construction is
 * O(n^2 log n).
 */

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/geometry.hpp"
#include "bicolor/route.hpp"

namespace bicolor {

namespace detail {

class PathBuilder {
 public:
  explicit PathBuilder(std::span<const ColoredPoint> pts) : pts_(pts) {}

  // Path from a to b on X, colors opposite, X balanced, (X, a, b) non-special.
  std::vector<int> balanced(const std::vector<int>& x, int a, int b) {
    expect(contains(x, a) && contains(x, b) && color(a) != color(b), "balanced path: bad endpoints");
    if (x.size() == 2) return {a, b};
    {
      const auto xa = without(x, {a});
      for (int v : visible(hull(xa), a))
        if (color(v) != color(a) && v != b) return join({a}, excess(xa, v, b));
      const auto xb = without(x, {b});
      for (int v : visible(hull(xb), b))
        if (color(v) == color(a) && v != a) return join(excess(xb, a, v), {b});
    }
    const auto h = hull(x);
    if (hull_adjacent(h, a, b)) return consecutive_case(x, a, b);
    return partition_case(x, a, b);
  }

  // Path from a to b on X, both of the color that has one extra point.
  std::vector<int> excess(const std::vector<int>& x, int a, int b) {
    expect(contains(x, a) && contains(x, b) && a != b && color(a) == color(b), "excess path: bad endpoints");
    if (x.size() == 3) {
      for (int v : x)
        if (v != a && v != b) return {a, v, b};
    }
    const auto xa = without(x, {a});
    const auto ha = hull(xa);
    const auto ca = visible(ha, a);
    if (auto v = mixed_pick(ha, ca, color(a))) return join({a}, balanced(xa, *v, b));
    const auto xb = without(x, {b});
    const auto hb = hull(xb);
    const auto cb = visible(hb, b);
    if (auto v = mixed_pick(hb, cb, color(a))) return join(balanced(xb, a, *v), {b});
    if (all_of_color(ca, color(a))) return monochrome_case(x, a, b);
    if (all_of_color(cb, color(a))) return reversed(monochrome_case(x, b, a));
    return opposite_arc_case(x, a, b);
  }

  std::vector<int> cycle(const std::vector<int>& x) {
    const auto h = hull(x);
    for (std::size_t k = 0; k < h.size(); ++k) {
      const int u = h[k];
      const int v = h[(k + 1) % h.size()];
      if (color(u) != color(v)) return balanced(x, u, v);
    }
    const int r = h.front();
    const auto part = as_partition(partition(without(x, {r}), r, Rotation::CounterClockwise));
    auto p1 = balanced(with(part.s1, {r, part.p_next}), r, part.p_next);
    auto p2 = balanced(with(part.s2, {r}), part.p_next, r);
    p2.pop_back();
    return join(p1, p2);
  }

  bool special(const std::vector<int>& x, int a, int b) {
    if (color(a) == color(b)) return false;
    const auto cnt = std::count_if(x.begin(), x.end(), [&](int v) { return color(v) == Color::Red; });
    if (2 * static_cast<std::size_t>(cnt) != x.size()) return false;
    const auto h = hull(x);
    for (int v : {a, b}) {
      auto [prev, next] = neighbors(h, v);
      if (color(prev) != color(v) || color(next) != color(v)) return false;
    }
    for (int v : {a, b}) {
      const int o = v == a ? b : a;
      const auto rest = without(x, {v});
      for (Rotation dir : {Rotation::Clockwise, Rotation::CounterClockwise})
        if (!ends_at(partition(rest, v, dir), o)) return false;
    }
    return true;
  }

 private:
  Color color(int v) const { return pts_[static_cast<std::size_t>(v)].color; }

  static void expect(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
  }

  static bool contains(const std::vector<int>& x, int v) { return std::find(x.begin(), x.end(), v) != x.end(); }

  static std::vector<int> without(const std::vector<int>& x, std::initializer_list<int> drop) {
    std::vector<int> out;
    out.reserve(x.size());
    for (int v : x)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
    return out;
  }

  static std::vector<int> with(std::vector<int> x, std::initializer_list<int> add) {
    x.insert(x.end(), add.begin(), add.end());
    return x;
  }

  // Concatenates two walks that share their junction vertex, or are to be
  // joined by an edge when they do not.
  static std::vector<int> join(std::vector<int> a, const std::vector<int>& b) {
    auto it = b.begin();
    if (!a.empty() && !b.empty() && a.back() == b.front()) ++it;
    a.insert(a.end(), it, b.end());
    return a;
  }

  static std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
  }

  std::vector<int> hull(const std::vector<int>& x) const { return hull_of(pts_, std::span<const int>(x)); }

  std::vector<int> visible(const std::vector<int>& h, int from) const {
    return visible_arc(pts_, std::span<const int>(h), pts_[static_cast<std::size_t>(from)]);
  }

  static bool hull_adjacent(const std::vector<int>& h, int a, int b) {
    auto [p, n] = neighbors(h, a);
    return p == b || n == b;
  }

  // (ccw predecessor, ccw successor) on a ccw hull.
  static std::pair<int, int> neighbors(const std::vector<int>& h, int v) {
    const auto it = std::find(h.begin(), h.end(), v);
    expect(it != h.end(), "point is not on the hull");
    const std::size_t k = static_cast<std::size_t>(it - h.begin());
    return {h[(k + h.size() - 1) % h.size()], h[(k + 1) % h.size()]};
  }

  PartitionResult partition(const std::vector<int>& rest, int center, Rotation dir) const {
    auto radial = radial_order_of(pts_, std::span<const int>(rest), pts_[static_cast<std::size_t>(center)], dir);
    return partition_from_radial(pts_, std::move(radial), center, dir);
  }

  static const Partition& as_partition(const PartitionResult& r) {
    const auto* p = std::get_if<Partition>(&r);
    expect(p != nullptr, "expected a proper partition");
    return *p;
  }

  static bool all_of_color(const std::vector<int>& arc, Color c, std::span<const ColoredPoint> pts) {
    return std::all_of(arc.begin(), arc.end(), [&](int v) { return pts[static_cast<std::size_t>(v)].color == c; });
  }
  bool all_of_color(const std::vector<int>& arc, Color c) const { return all_of_color(arc, c, pts_); }

  // A visible point of the other color with a hull neighbor of color c, when
  // the visible arc holds both colors.
  std::optional<int> mixed_pick(const std::vector<int>& h, const std::vector<int>& arc, Color c) const {
    if (all_of_color(arc, c) || all_of_color(arc, opposite(c))) return std::nullopt;
    for (int v : arc) {
      if (color(v) == c) continue;
      auto [p, n] = neighbors(h, v);
      if (color(p) == c || color(n) == c) return v;
    }
    return std::nullopt;
  }

  // a and b adjacent on the hull, each seeing only its own color apart from
  // the other endpoint: enter and leave an inner path through a bridge of
  // the hull of the rest seen by both.
  std::vector<int> consecutive_case(const std::vector<int>& x, int a, int b) {
    const auto y = without(x, {a, b});
    const auto hy = hull(y);
    const auto va = visible(hy, a);
    const auto vb = visible(hy, b);
    const std::size_t m = hy.size();
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < m; ++k)
        for (int flip = 0; flip < 2; ++flip) {
          int enter = hy[k];
          int leave = hy[(k + 1) % m];
          if (flip) std::swap(enter, leave);
          if (color(enter) == color(a) || color(leave) != color(a)) continue;
          const bool seen = contains(va, enter) && contains(vb, leave);
          const bool both = seen && contains(vb, enter) && contains(va, leave);
          if (pass == 0 ? !both : !seen) continue;
          return join(join({a}, balanced(y, enter, leave)), {b});
        }
    throw InternalError("consecutive endpoints: no bridge visible from both");
  }

  std::vector<int> partition_case(const std::vector<int>& x, int a, int b) {
    for (int c : {a, b})
      for (Rotation dir : {Rotation::CounterClockwise, Rotation::Clockwise}) {
        const int o = c == a ? b : a;
        const auto rest = without(x, {c});
        const auto res = partition(rest, c, dir);
        const auto* p = std::get_if<Partition>(&res);
        if (p == nullptr || p->p_next == o) continue;
        auto route = split(*p, c, o);
        return c == a ? route : reversed(std::move(route));
      }
    throw InternalError("every partition around the endpoints ends at the other endpoint");
  }

  // Path from the partition center c to o, where p_next and o share the
  // color opposite to c.
  std::vector<int> split(const Partition& p, int c, int o) {
    const int pn = p.p_next;
    if (contains(p.s2, o)) return join(balanced(with(p.s1, {c, pn}), c, pn), excess(p.s2, pn, o));
    return join(balanced(with(p.s2, {c}), c, pn), excess(with(p.s1, {pn}), pn, o));
  }

  // Visible chain of hull(side) as seen from `eye`, starting at `start`.
  std::vector<int> chain_from(const std::vector<int>& side, int eye, int start) const {
    auto arc = visible(hull(side), eye);
    if (arc.back() == start) std::reverse(arc.begin(), arc.end());
    expect(arc.front() == start, "chain does not start at the partition point");
    return arc;
  }

  // First point of `chain` that has color c; returns its position.
  std::size_t first_of(const std::vector<int>& chain, Color c) const {
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (color(chain[k]) == c) return k;
    throw InternalError("chain has no point of the required color");
  }

  // Extra-color endpoints r, r2 (color A) where everything r sees after its
  // removal is of color A.
  std::vector<int> monochrome_case(const std::vector<int>& x, int r, int r2) {
    const Color ca = color(r);
    const auto rest = without(x, {r});
    const auto part = as_partition(partition(rest, r, Rotation::CounterClockwise));
    const bool in2 = contains(part.s2, r2);
    const auto& own = in2 ? part.s2 : part.s1;
    const auto& oth = in2 ? part.s1 : part.s2;
    const int q_own = in2 ? part.p_next : part.p_i;
    const int q_oth = in2 ? part.p_i : part.p_next;
    if (!special(own, q_own, r2)) return join(balanced(with(oth, {r, q_own}), r, q_own), balanced(own, q_own, r2));

    const auto c_oth = chain_from(oth, r, q_oth);
    const auto c_own = chain_from(own, r, q_own);
    const std::size_t j = first_of(c_oth, ca);
    const std::size_t jo = first_of(c_own, ca);
    expect(j >= 1 && jo >= 1, "chains must start with the other color");
    const int qj = c_oth[j - 1];
    const int qo = c_own[jo - 1];
    const int p = tangent_towards(oth, qo, r, c_oth);
    if (color(p) == ca) return join(join({r}, balanced(oth, qj, p)), balanced(own, qo, r2));
    const int next_own = c_own[jo];
    expect(next_own != r2, "special side: red successor coincides with the endpoint");
    return join(join({r}, excess(with(oth, {q_own}), q_own, p)), excess(without(own, {q_own}), next_own, r2));
  }

  // Tangent point of hull(side) from `from` lying on the chain seen from
  // `eye`; between two candidates, the one whose tangent line separates
  // eye from side.
  int tangent_towards(const std::vector<int>& side, int from, int eye, const std::vector<int>& chain) const {
    const auto arc = visible(hull(side), from);
    const int t1 = arc.front();
    const int t2 = arc.back();
    const bool in1 = contains(chain, t1);
    const bool in2 = contains(chain, t2);
    if (in1 != in2) return in1 ? t1 : t2;
    const auto& f = pts_[static_cast<std::size_t>(from)];
    const auto& e = pts_[static_cast<std::size_t>(eye)];
    for (int t : {t1, t2}) {
      const auto& tp = pts_[static_cast<std::size_t>(t)];
      const int se = orientation(f, tp, e);
      bool separates = true;
      for (int v : side)
        if (v != t && orientation(f, tp, pts_[static_cast<std::size_t>(v)]) == se) separates = false;
      if (separates) return t;
    }
    return t1;
  }

  // Both endpoints (color A) see only the other color after their removal.
  // Tried in both orientations: first a point of color A seen from r's
  // neighbor b2, then a partition around b2 that leaves r2 on the near side.
  std::vector<int> opposite_arc_case(const std::vector<int>& x, int r, int r2) {
    constexpr Rotation dirs[] = {Rotation::CounterClockwise, Rotation::Clockwise};
    for (Rotation dir : dirs)
      if (auto route = seen_from_neighbor(x, r, r2, dir)) return *route;
    for (int strict = 1; strict >= 0; --strict)
      for (Rotation dir : dirs)
        if (auto route = partition_from_neighbor(x, r, r2, dir, strict != 0)) return *route;
    throw InternalError("no construction applies to both-blue visible arcs");
  }

  // b2 is the hull neighbor of r that the partition around b2 sweeps away
  // from: r's clockwise neighbor for a counterclockwise partition.
  int sweep_neighbor(const std::vector<int>& x, int r, Rotation dir) const {
    auto [prev, next] = neighbors(hull(x), r);
    return dir == Rotation::CounterClockwise ? prev : next;
  }

  std::optional<std::vector<int>> seen_from_neighbor(const std::vector<int>& x, int r, int r2, Rotation dir) {
    const int b2 = sweep_neighbor(x, r, dir);
    if (color(b2) == color(r)) return std::nullopt;
    const auto z = without(x, {r, b2});
    for (int v : visible(hull(z), b2))
      if (color(v) == color(r) && v != r2) return join({r, b2}, excess(z, v, r2));
    return std::nullopt;
  }

  std::optional<std::vector<int>> partition_from_neighbor(const std::vector<int>& x, int r, int r2, Rotation dir,
                                                          bool near_side_only) {
    const Color ca = color(r);
    const int b2 = sweep_neighbor(x, r, dir);
    if (color(b2) == ca) return std::nullopt;
    const auto res = partition(without(x, {r, b2}), b2, dir);
    const auto* p = std::get_if<Partition>(&res);
    if (p == nullptr) return std::nullopt;
    if (p->p_next != r2) {
      if (near_side_only && !contains(p->s1, r2)) return std::nullopt;
      return join({r}, split(*p, b2, r2));
    }
    const int b1 = p->s1.front();
    if (color(b1) == ca || !contains(visible(hull(without(x, {r})), r), b1)) return std::nullopt;
    return join(join({r}, excess(with(p->s1, {b2}), b1, b2)), balanced(with(p->s2, {b2}), b2, r2));
  }

  std::span<const ColoredPoint> pts_;
};

}  // namespace detail

/// 1-plane Hamiltonian alternating path from a to b.
inline AltRoute build_path(const BicoloredSet& s, int a, int b) {
  const int n = s.size();
  if (a < 0 || b < 0 || a >= n || b >= n) throw PreconditionViolated("endpoint out of range");
  if (!s.on_hull(a) || !s.on_hull(b)) throw PreconditionViolated("endpoints must lie on the hull boundary");
  if (a == b) {
    if (n != 1) throw PreconditionViolated("path endpoints must differ");
    return make_route(s, RouteKind::Path, {a});
  }
  const int red = s.red_count();
  const int blue = s.blue_count();
  detail::PathBuilder pb(s.points());
  std::vector<int> route;
  if (red == blue) {
    if (s.color(a) == s.color(b)) throw PreconditionViolated("balanced sets need endpoints of different colors");
    if (is_special(s, a, b)) throw SpecialConfiguration("special configuration: no 1-plane path is guaranteed");
    route = pb.balanced(s.all_ids(), a, b);
  } else {
    if (std::abs(red - blue) != 1) throw PreconditionViolated("color counts must be equal or differ by one");
    const Color major = red > blue ? Color::Red : Color::Blue;
    if (s.color(a) != major || s.color(b) != major)
      throw PreconditionViolated("with one extra point of a color, both endpoints must have that color");
    route = pb.excess(s.all_ids(), a, b);
  }
  return make_route(s, RouteKind::Path, std::move(route));
}

/// 1-plane Hamiltonian alternating cycle.
inline AltRoute build_cycle(const BicoloredSet& s) {
  if (s.red_count() != s.blue_count() || s.red_count() < 2)
    throw PreconditionViolated("a cycle needs n >= 2 points of each color");
  detail::PathBuilder pb(s.points());
  return make_route(s, RouteKind::Cycle, pb.cycle(s.all_ids()));
}

}  // namespace bicolor

#pragma once
/**
 * Hamiltonian alternating routes (paths and cycles) and their verification.
 *
 * Edge k of a route joins vertices[k] and vertices[k+1]; a cycle also has the
 * closing edge from the last vertex back to the first.
 */

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/geometry.hpp"

namespace bicolor {

enum class RouteKind : std::uint8_t { Path, Cycle };

inline const char* kind_name(RouteKind k) noexcept { return k == RouteKind::Path ? "path" : "cycle"; }

struct AltRoute {
  RouteKind kind = RouteKind::Path;
  std::vector<int> vertices;
  // Crossing edge pairs (by edge position, first < second), sorted.
  std::vector<std::pair<int, int>> crossings;
  std::vector<int> per_edge_crossings;

  int edge_count() const noexcept {
    const int k = static_cast<int>(vertices.size());
    if (k < 2) return 0;
    return kind == RouteKind::Cycle ? k : k - 1;
  }
  std::pair<int, int> edge(int e) const {
    const int k = static_cast<int>(vertices.size());
    return {vertices[static_cast<std::size_t>(e)], vertices[static_cast<std::size_t>((e + 1) % k)]};
  }
  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int max_edge_crossings() const noexcept {
    return per_edge_crossings.empty() ? 0 : *std::max_element(per_edge_crossings.begin(), per_edge_crossings.end());
  }
  bool one_plane() const noexcept { return max_edge_crossings() <= 1; }
};

namespace detail {

// Chords (a,b) and (c,d) of a convex polygon cross iff their endpoints
// interleave along the boundary.
constexpr bool chords_cross(int a, int b, int c, int d) noexcept {
  if (a == c || a == d || b == c || b == d) return false;
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

// Output-sensitive interleaving sweep over the boundary positions.
inline std::vector<std::pair<int, int>> convex_crossings(int h, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> ending(static_cast<std::size_t>(h));
  std::vector<std::vector<int>> starting(static_cast<std::size_t>(h));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto [a, b] = edges[static_cast<std::size_t>(e)];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    starting[static_cast<std::size_t>(a)].push_back(e);
    ending[static_cast<std::size_t>(b)].push_back(e);
  }
  // Active chords in a list ordered by low endpoint; chords are appended in
  // that order, so crossings of a chord ending at x are exactly the active
  // chords listed after it that do not share an endpoint.  O(h + m + K).
  const int m = static_cast<int>(edges.size());
  std::vector<int> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    lo[static_cast<std::size_t>(e)] = std::min(edges[static_cast<std::size_t>(e)].first, edges[static_cast<std::size_t>(e)].second);
    hi[static_cast<std::size_t>(e)] = std::max(edges[static_cast<std::size_t>(e)].first, edges[static_cast<std::size_t>(e)].second);
  }
  const int end = m;
  std::vector<int> next(static_cast<std::size_t>(m) + 1, end), prev(static_cast<std::size_t>(m) + 1, end);
  auto link_next = [&](int e) -> int& { return next[static_cast<std::size_t>(e)]; };
  auto link_prev = [&](int e) -> int& { return prev[static_cast<std::size_t>(e)]; };
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < h; ++x) {
    for (int e : ending[static_cast<std::size_t>(x)]) {
      const int a = lo[static_cast<std::size_t>(e)];
      for (int f = link_next(e); f != end; f = link_next(f))
        if (lo[static_cast<std::size_t>(f)] != a && hi[static_cast<std::size_t>(f)] != x)
          out.emplace_back(std::min(e, f), std::max(e, f));
    }
    for (int e : ending[static_cast<std::size_t>(x)]) {
      link_next(link_prev(e)) = link_next(e);
      link_prev(link_next(e)) = link_prev(e);
    }
    for (int e : starting[static_cast<std::size_t>(x)]) {
      const int tail = link_prev(end);
      link_next(tail) = e;
      link_prev(e) = tail;
      link_next(e) = end;
      link_prev(end) = e;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::pair<int, int>> geometric_crossings(std::span<const ColoredPoint> pts,
                                                            const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [a, b] = edges[e];
      const auto [c, d] = edges[f];
      if (a == b || c == d) continue;
      if (segments_cross(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                         pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]))
        out.emplace_back(static_cast<int>(e), static_cast<int>(f));
    }
  return out;
}

}  // namespace detail

/// Recomputes the crossing fields of `route`.  Indices must be in range.
inline AltRoute& annotate(const BicoloredSet& s, AltRoute& route) {
  std::vector<std::pair<int, int>> edges;
  const int m = route.edge_count();
  edges.reserve(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    auto uv = route.edge(e);
    if (uv.first < 0 || uv.first >= s.size() || uv.second < 0 || uv.second >= s.size())
      throw PreconditionViolated("route index out of range");
    edges.push_back(uv);
  }
  route.crossings = s.is_convex() ? detail::convex_crossings(s.size(), edges) : detail::geometric_crossings(s.points(), edges);
  route.per_edge_crossings.assign(static_cast<std::size_t>(m), 0);
  for (auto [e, f] : route.crossings) {
    route.per_edge_crossings[static_cast<std::size_t>(e)]++;
    route.per_edge_crossings[static_cast<std::size_t>(f)]++;
  }
  return route;
}

inline AltRoute make_route(const BicoloredSet& s, RouteKind kind, std::vector<int> vertices) {
  AltRoute r{kind, std::move(vertices), {}, {}};
  annotate(s, r);
  return r;
}

/// The crossing bound the constructions guarantee for this kind of route, if
/// the counts and endpoints fall under one of the proven statements.
inline std::optional<int> guaranteed_bound(const BicoloredSet& s, const AltRoute& route) {
  const int red = s.red_count();
  const int blue = s.blue_count();
  const auto& rs = s.runs();
  if (route.kind == RouteKind::Cycle) {
    if (red != blue) return std::nullopt;
    return red - std::max(rs.red_runs, rs.blue_runs);
  }
  if (route.vertices.size() < 2) return std::nullopt;
  const int a = route.vertices.front();
  const int b = route.vertices.back();
  if (a < 0 || b < 0 || a >= s.size() || b >= s.size() || !s.on_hull(a) || !s.on_hull(b)) return std::nullopt;
  if (red == blue && s.color(a) != s.color(b)) return red - rs.runs_of(s.color(a));
  if (std::abs(red - blue) == 1 && s.color(a) == s.color(b)) {
    const Color minority = red < blue ? Color::Red : Color::Blue;
    if (s.color(a) == minority) return std::nullopt;
    return s.count(minority) - rs.runs_of(minority);
  }
  return std::nullopt;
}

struct VerifyOptions {
  std::optional<int> bound;  // overrides guaranteed_bound when set
  bool check_bound = true;
  bool require_one_plane = true;
  // Special configurations: exactly one edge crossed twice, the rest at most once.
  bool expect_one_double = false;
  std::optional<std::pair<int, int>> endpoints;
};

struct RouteReport {
  RouteKind kind = RouteKind::Path;
  bool hamiltonian = false;
  bool alternating = false;
  int crossings = 0;
  int max_edge_crossings = 0;
  int doubly_crossed_edges = 0;
  bool one_plane = false;
  std::optional<int> bound;
  bool within_bound = true;
  int bridges_used = 0;
  int bridges_total = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline RouteReport verify_route(const BicoloredSet& s, const AltRoute& input, const VerifyOptions& opt = {}) {
  RouteReport rep;
  rep.kind = input.kind;
  rep.bridges_total = static_cast<int>(s.runs().bridges.size());
  const int n = s.size();
  const auto& v = input.vertices;

  bool in_range = true;
  for (int x : v)
    if (x < 0 || x >= n) in_range = false;
  if (!in_range) {
    rep.violations.push_back("route index out of range");
    return rep;
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int x : v) seen[static_cast<std::size_t>(x)]++;
  rep.hamiltonian = static_cast<int>(v.size()) == n && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  if (!rep.hamiltonian) {
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<std::size_t>(i)] == 0) rep.violations.push_back("point " + std::to_string(i + 1) + " not visited");
      if (seen[static_cast<std::size_t>(i)] > 1) rep.violations.push_back("point " + std::to_string(i + 1) + " visited more than once");
    }
  }
  if (input.kind == RouteKind::Cycle && v.size() < 3) rep.violations.push_back("cycle needs at least three vertices");

  AltRoute route = input;
  annotate(s, route);
  rep.alternating = true;
  for (int e = 0; e < route.edge_count(); ++e) {
    auto [a, b] = route.edge(e);
    if (s.color(a) == s.color(b)) {
      rep.alternating = false;
      rep.violations.push_back("edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) + " is monochromatic");
    }
  }
  rep.crossings = route.crossing_count();
  rep.max_edge_crossings = route.max_edge_crossings();
  rep.one_plane = route.one_plane();
  for (int c : route.per_edge_crossings) {
    if (c == 2) rep.doubly_crossed_edges++;
  }
  if (opt.expect_one_double) {
    if (rep.max_edge_crossings != 2 || rep.doubly_crossed_edges != 1)
      rep.violations.push_back("expected exactly one edge crossed twice and all others at most once");
  } else if (opt.require_one_plane && !rep.one_plane) {
    for (int e = 0; e < route.edge_count(); ++e)
      if (route.per_edge_crossings[static_cast<std::size_t>(e)] > 1) {
        auto [a, b] = route.edge(e);
        rep.violations.push_back("edge " + std::to_string(a + 1) + "-" + std::to_string(b + 1) + " crossed " +
                                 std::to_string(route.per_edge_crossings[static_cast<std::size_t>(e)]) + " times");
      }
  }

  std::set<std::pair<int, int>> used;
  for (int e = 0; e < route.edge_count(); ++e) {
    auto [a, b] = route.edge(e);
    used.insert({std::min(a, b), std::max(a, b)});
  }
  for (auto [a, b] : s.runs().bridges)
    if (used.count({std::min(a, b), std::max(a, b)})) rep.bridges_used++;

  if (opt.endpoints && input.kind == RouteKind::Path && !v.empty()) {
    if (v.front() != opt.endpoints->first || v.back() != opt.endpoints->second)
      rep.violations.push_back("path endpoints differ from the requested ones");
  }

  rep.bound = opt.bound ? opt.bound : guaranteed_bound(s, route);
  if (opt.check_bound && rep.bound) {
    rep.within_bound = rep.crossings <= *rep.bound;
    if (!rep.within_bound)
      rep.violations.push_back(std::to_string(rep.crossings) + " crossings exceed the bound " + std::to_string(*rep.bound));
  }
  return rep;
}

}  // namespace bicolor

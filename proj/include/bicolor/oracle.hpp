#pragma once
/**
 * Exhaustive ground truth on small instances.
 *
 * Every Hamiltonian alternating route of the requested kind is enumerated by
 * backtracking, with crossings counted incrementally and branches cut once
 * they exceed the best complete route.  Cycles are enumerated once per
 * undirected cycle: they start at point 0 and the second vertex is smaller
 * than the last.  Free paths are enumerated once per undirected path.
 */

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <optional>
#include <vector>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/route.hpp"

namespace bicolor {

struct OracleQuery {
  RouteKind kind = RouteKind::Cycle;
  int from = -1;  // -1 on both ends: free endpoints
  int to = -1;

  static OracleQuery cycle() { return {RouteKind::Cycle, -1, -1}; }
  static OracleQuery path(int s, int t) { return {RouteKind::Path, s, t}; }
  static OracleQuery free_path() { return {RouteKind::Path, -1, -1}; }
};

struct OracleOptions {
  int max_points = 14;
  std::size_t max_routes = 8;  // optimal routes kept
  bool decide_one_plane = true;
};

struct OracleResult {
  std::optional<int> min_crossings;
  std::vector<AltRoute> optimal_routes;
  bool exists_1plane = false;
  bool all_optima_1plane = true;
};

namespace detail {

class RouteSearch {
 public:
  RouteSearch(const BicoloredSet& s, OracleQuery q) : s_(s), q_(q), n_(s.size()) {
    cross_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d) cross_[idx(a, b, c, d)] = compute_cross(a, b, c, d);
  }

  // Calls `leaf` on every complete route; `prune(partial_crossings,
  // per_edge_max)` may cut a branch.
  void run(const std::function<bool(int, int)>& prune, const std::function<bool(const std::vector<int>&, int, int)>& leaf) {
    prune_ = &prune;
    leaf_ = &leaf;
    stop_ = false;
    for (int start : starts()) {
      route_.assign(1, start);
      used_.assign(static_cast<std::size_t>(n_), 0);
      used_[static_cast<std::size_t>(start)] = 1;
      edge_cross_.clear();
      extend();
      if (stop_) return;
    }
  }

  bool feasible() const {
    const int red = s_.red_count();
    const int blue = s_.blue_count();
    if (q_.kind == RouteKind::Cycle) return red == blue && n_ >= 4;
    if (std::abs(red - blue) > 1) return false;
    if (q_.from < 0) return n_ >= 1;
    if (q_.from == q_.to) return n_ == 1;
    const Color cs = s_.color(q_.from);
    const Color ct = s_.color(q_.to);
    if (red == blue) return cs != ct;
    const Color major = red > blue ? Color::Red : Color::Blue;
    return cs == major && ct == major;
  }

 private:
  std::size_t idx(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }

  char compute_cross(int a, int b, int c, int d) const {
    if (a == b || c == d) return 0;
    if (s_.is_convex()) return chords_cross(a, b, c, d);
    const auto pts = s_.points();
    return segments_cross(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                          pts[static_cast<std::size_t>(c)], pts[static_cast<std::size_t>(d)]);
  }

  std::vector<int> starts() const {
    if (q_.kind == RouteKind::Cycle) return {0};
    if (q_.from >= 0) return {q_.from};
    std::vector<int> out;
    const int red = s_.red_count(), blue = s_.blue_count();
    for (int v = 0; v < n_; ++v) {
      if (red != blue && s_.color(v) != (red > blue ? Color::Red : Color::Blue)) continue;
      out.push_back(v);
    }
    return out;
  }

  // Adds edge (u,v), returns false if the branch is cut.
  bool push_edge(int u, int v) {
    const int m = static_cast<int>(edge_cross_.size());
    int worst = 0;
    new_hits_.clear();
    for (int e = 0; e < m; ++e) {
      if (cross_[idx(u, v, route_[static_cast<std::size_t>(e)], route_[static_cast<std::size_t>(e + 1)])]) {
        new_hits_.push_back(e);
      }
    }
    for (int e : new_hits_) {
      edge_cross_[static_cast<std::size_t>(e)]++;
      worst = std::max(worst, edge_cross_[static_cast<std::size_t>(e)]);
    }
    const int added = static_cast<int>(new_hits_.size());
    edge_cross_.push_back(added);
    hits_stack_.push_back(new_hits_);
    total_ += added;
    worst = std::max(worst, added);
    max_ = std::max(max_, worst);
    return !(*prune_)(total_, max_);
  }

  void pop_edge() {
    for (int e : hits_stack_.back()) edge_cross_[static_cast<std::size_t>(e)]--;
    total_ -= edge_cross_.back();
    edge_cross_.pop_back();
    hits_stack_.pop_back();
    max_ = 0;
    for (int c : edge_cross_) max_ = std::max(max_, c);
  }

  void extend() {
    if (stop_) return;
    const int last = route_.back();
    if (static_cast<int>(route_.size()) == n_) {
      if (q_.kind == RouteKind::Cycle) {
        if (route_[1] > route_.back()) return;
        // Edges sharing a vertex with the closing edge never count as crossed.
        if (push_edge(last, route_[0])) stop_ = (*leaf_)(route_, total_, max_);
        pop_edge();
        return;
      }
      if (q_.from < 0 && route_.front() > route_.back()) return;
      stop_ = (*leaf_)(route_, total_, max_);
      return;
    }
    const int remaining = n_ - static_cast<int>(route_.size());
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || s_.color(v) == s_.color(last)) continue;
      if (q_.kind == RouteKind::Path && q_.to >= 0 && (v == q_.to) != (remaining == 1)) continue;
      route_.push_back(v);
      used_[static_cast<std::size_t>(v)] = 1;
      // push_edge compares against edges formed by route_[e], route_[e+1]
      // for e < current edge count, which excludes the edge being added.
      if (push_edge(last, v)) extend();
      pop_edge();
      used_[static_cast<std::size_t>(v)] = 0;
      route_.pop_back();
      if (stop_) return;
    }
  }

  const BicoloredSet& s_;
  OracleQuery q_;
  int n_;
  std::vector<char> cross_;
  std::vector<int> route_;
  std::vector<char> used_;
  std::vector<int> edge_cross_;
  std::vector<std::vector<int>> hits_stack_;
  std::vector<int> new_hits_;
  int total_ = 0;
  int max_ = 0;
  bool stop_ = false;
  const std::function<bool(int, int)>* prune_ = nullptr;
  const std::function<bool(const std::vector<int>&, int, int)>* leaf_ = nullptr;
};

}  // namespace detail

/// Whether some Hamiltonian alternating route of the requested kind is
/// 1-plane.  Searches with every branch cut as soon as an edge is crossed twice.
inline bool exists_one_plane(const BicoloredSet& s, OracleQuery q, int max_points = 14) {
  if (s.size() > max_points) throw TooLarge("oracle limited to " + std::to_string(max_points) + " points");
  detail::RouteSearch search(s, q);
  if (!search.feasible()) return false;
  bool found = false;
  std::function<bool(int, int)> prune = [](int, int worst) { return worst > 1; };
  std::function<bool(const std::vector<int>&, int, int)> leaf = [&](const std::vector<int>&, int, int) {
    found = true;
    return true;
  };
  search.run(prune, leaf);
  return found;
}

inline OracleResult enumerate_min(const BicoloredSet& s, OracleQuery q, const OracleOptions& opt = {}) {
  if (s.size() > opt.max_points) throw TooLarge("oracle limited to " + std::to_string(opt.max_points) + " points");
  if (q.kind == RouteKind::Cycle && (q.from >= 0 || q.to >= 0))
    throw PreconditionViolated("cycle queries take no endpoints");
  if (q.kind == RouteKind::Path && ((q.from < 0) != (q.to < 0)))
    throw PreconditionViolated("give both path endpoints or neither");
  if (q.from >= s.size() || q.to >= s.size()) throw PreconditionViolated("endpoint out of range");

  OracleResult res;
  detail::RouteSearch search(s, q);
  if (!search.feasible()) {
    res.all_optima_1plane = false;
    return res;
  }
  int best = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> kept;
  bool all_one_plane = true;
  std::function<bool(int, int)> prune = [&](int total, int) { return total > best; };
  std::function<bool(const std::vector<int>&, int, int)> leaf = [&](const std::vector<int>& r, int total, int worst) {
    if (total < best) {
      best = total;
      kept.clear();
      all_one_plane = true;
    }
    if (total == best) {
      if (kept.size() < opt.max_routes) kept.push_back(r);
      all_one_plane = all_one_plane && worst <= 1;
    }
    return false;
  };
  search.run(prune, leaf);
  if (best == std::numeric_limits<int>::max()) {
    res.all_optima_1plane = false;
    return res;
  }
  res.min_crossings = best;
  res.all_optima_1plane = all_one_plane;
  for (auto& r : kept) res.optimal_routes.push_back(make_route(s, q.kind, r));
  res.exists_1plane = all_one_plane || (opt.decide_one_plane && exists_one_plane(s, q, opt.max_points));
  return res;
}

/// Replaces the crossing edges e1 = p1q1 and e2 = p2q2 (p before q along the
/// route) by p1p2 and q1q2, reversing the stretch from q1 to p2.
inline AltRoute quadrangular_swap(const BicoloredSet& s, const AltRoute& route, int e1, int e2) {
  const int m = route.edge_count();
  if (e1 < 0 || e2 < 0 || e1 >= m || e2 >= m || e1 == e2) throw PreconditionViolated("edge positions out of range");
  if (e1 > e2) std::swap(e1, e2);
  auto [p1, q1] = route.edge(e1);
  auto [p2, q2] = route.edge(e2);
  if (p1 == p2 || p1 == q2 || q1 == p2 || q1 == q2) throw PreconditionViolated("edges share an endpoint");
  const bool crossed = s.is_convex() ? detail::chords_cross(p1, q1, p2, q2)
                                     : segments_cross(s.point(p1), s.point(q1), s.point(p2), s.point(q2));
  if (!crossed) throw PreconditionViolated("edges do not cross");
  if (s.color(q1) != s.color(p2)) throw PreconditionViolated("reconnection would break alternation");
  std::vector<int> v = route.vertices;
  std::reverse(v.begin() + e1 + 1, v.begin() + e2 + 1);
  return make_route(s, route.kind, std::move(v));
}

}  // namespace bicolor

#pragma once
// SVG 1.1 drawing of a point set and an optional route.  Red points are
// solid, blue points hollow, crossings are marked with a small cross.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "bicolor/bicolored_set.hpp"
#include "bicolor/route.hpp"

namespace bicolor {

struct SvgOptions {
  double size = 800;  // longest side of the drawing area in px
  double margin = 24;
  double point_radius = 5;
  bool labels = true;  // 1-based indices next to the points
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace detail

inline std::string render_svg(const BicoloredSet& s, const AltRoute& route, const SvgOptions& opt = {}) {
  const auto pts = s.points();
  double min_x = static_cast<double>(pts[0].x), max_x = min_x;
  double min_y = static_cast<double>(pts[0].y), max_y = min_y;
  for (const auto& p : pts) {
    min_x = std::min(min_x, static_cast<double>(p.x));
    max_x = std::max(max_x, static_cast<double>(p.x));
    min_y = std::min(min_y, static_cast<double>(p.y));
    max_y = std::max(max_y, static_cast<double>(p.y));
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double k = opt.size / span;
  const double width = (max_x - min_x) * k + 2 * opt.margin;
  const double height = (max_y - min_y) * k + 2 * opt.margin;
  auto X = [&](double x) { return opt.margin + (x - min_x) * k; };
  auto Y = [&](double y) { return opt.margin + (max_y - y) * k; };  // y grows upwards
  auto px = [&](int i) { return X(static_cast<double>(pts[static_cast<std::size_t>(i)].x)); };
  auto py = [&](int i) { return Y(static_cast<double>(pts[static_cast<std::size_t>(i)].y)); };

  AltRoute r = route;
  if (!r.vertices.empty()) annotate(s, r);

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << detail::num(width) << "\" height=\""
      << detail::num(height) << "\" viewBox=\"0 0 " << detail::num(width) << ' ' << detail::num(height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (int e = 0; e < r.edge_count(); ++e) {
    auto [a, b] = r.edge(e);
    out << "<line x1=\"" << detail::num(px(a)) << "\" y1=\"" << detail::num(py(a)) << "\" x2=\"" << detail::num(px(b))
        << "\" y2=\"" << detail::num(py(b)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"crossings\" stroke=\"darkorange\" stroke-width=\"2\">\n";
  const double m = opt.point_radius * 0.9;
  for (auto [e, f] : r.crossings) {
    auto [a, b] = r.edge(e);
    auto [c, d] = r.edge(f);
    const double x1 = px(a), y1 = py(a), x2 = px(b), y2 = py(b);
    const double x3 = px(c), y3 = py(c), x4 = px(d), y4 = py(d);
    const double den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    if (den == 0) continue;
    const double t = ((x1 - x3) * (y3 - y4) - (y1 - y3) * (x3 - x4)) / den;
    const double cx = x1 + t * (x2 - x1), cy = y1 + t * (y2 - y1);
    out << "<path class=\"crossing\" d=\"M" << detail::num(cx - m) << ' ' << detail::num(cy - m) << 'L'
        << detail::num(cx + m) << ' ' << detail::num(cy + m) << 'M' << detail::num(cx - m) << ' '
        << detail::num(cy + m) << 'L' << detail::num(cx + m) << ' ' << detail::num(cy - m) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g id=\"points\" stroke-width=\"2\">\n";
  for (int i = 0; i < s.size(); ++i) {
    const bool red = s.color(i) == Color::Red;
    out << "<circle cx=\"" << detail::num(px(i)) << "\" cy=\"" << detail::num(py(i)) << "\" r=\""
        << detail::num(opt.point_radius) << "\" stroke=\"" << (red ? "red" : "blue") << "\" fill=\""
        << (red ? "red" : "white") << "\"/>\n";
  }
  out << "</g>\n";

  if (opt.labels) {
    out << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">\n";
    for (int i = 0; i < s.size(); ++i)
      out << "<text x=\"" << detail::num(px(i) + opt.point_radius + 2) << "\" y=\""
          << detail::num(py(i) - opt.point_radius - 2) << "\">" << i + 1 << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bicolor

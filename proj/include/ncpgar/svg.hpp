#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ncpgar/lattice.hpp"
#include "ncpgar/noncross.hpp"

namespace ncpgar {

namespace detail {

inline std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline const char* part_color(int i) {
  static const char* palette[] = {"#4878cf", "#d65f5f", "#6acc65", "#b47cc7",
                                  "#c4ad66", "#77bedb", "#ee854a", "#8c613c"};
  return palette[i % 8];
}

}  // namespace detail

/// Deterministic SVG diagram of a member: en dots on the unit circle, a
/// center dot, one translucent hull per non-singleton part (a chord for
/// two-point parts).
inline std::string render_svg(const Params& P, const Partition& u, int size = 400) {
  require_member(P, u);
  const int m = P.circle();
  const double cx = size / 2.0, cy = size / 2.0, r = size * 0.42;
  auto px = [&](int k) { return cx + r * std::cos(2.0 * M_PI * k / m); };
  auto py = [&](int k) { return cy - r * std::sin(2.0 * M_PI * k / m); };
  using detail::fixed6;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(size) + "\" height=\"" + std::to_string(size) + "\" viewBox=\"0 0 " +
         std::to_string(size) + " " + std::to_string(size) + "\">\n";
  svg += "  <circle cx=\"" + fixed6(cx) + "\" cy=\"" + fixed6(cy) + "\" r=\"" + fixed6(r) +
         "\" fill=\"none\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

  int colored = 0;
  for (int id = 0; id < u.part_count(); ++id) {
    std::vector<int> circle = u.circle_points_of_part(id);
    const bool has_c = u.part_has_center(id);
    const int count = (int)circle.size() + (has_c ? 1 : 0);
    if (count < 2) continue;
    const char* color = detail::part_color(colored++);
    // hull order: circle points from the covering arc, center appended when
    // it is a hull vertex (i.e. not surrounded by the part)
    std::vector<std::pair<double, double>> verts;
    if (!circle.empty()) {
      CircleArc arc = widest_gap(circle, m);
      std::sort(circle.begin(), circle.end(), [&](int a, int b) {
        return cyc_dist(arc.first, a, m) < cyc_dist(arc.first, b, m);
      });
    }
    for (int k : circle) verts.emplace_back(px(k), py(k));
    if (has_c && !hull_contains_origin(circle, m)) verts.emplace_back(cx, cy);
    if (verts.size() == 2) {
      svg += "  <line x1=\"" + fixed6(verts[0].first) + "\" y1=\"" + fixed6(verts[0].second) +
             "\" x2=\"" + fixed6(verts[1].first) + "\" y2=\"" + fixed6(verts[1].second) +
             "\" stroke=\"" + color + "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    } else {
      svg += "  <polygon points=\"";
      for (size_t i = 0; i < verts.size(); ++i) {
        if (i) svg += ' ';
        svg += fixed6(verts[i].first) + "," + fixed6(verts[i].second);
      }
      svg += "\" fill=\"" + std::string(color) +
             "\" fill-opacity=\"0.35\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    }
  }

  const double dot = size * 0.012;
  for (int k = 0; k < m; ++k)
    svg += "  <circle cx=\"" + fixed6(px(k)) + "\" cy=\"" + fixed6(py(k)) + "\" r=\"" +
           fixed6(dot) + "\" fill=\"#000000\"/>\n";
  svg += "  <circle cx=\"" + fixed6(cx) + "\" cy=\"" + fixed6(cy) + "\" r=\"" + fixed6(dot) +
         "\" fill=\"#000000\"/>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace ncpgar

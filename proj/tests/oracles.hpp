#pragma once

// Independent test oracles. These deliberately avoid the code paths they
// check: crossings are decided with floating-point convex hulls, and the
// convex complement follows the recursive construction step by step.

#include <cmath>
#include <vector>

#include "ncpgar/partition.hpp"

namespace oracle {

using ncpgar::Partition;

constexpr double kTol = 1e-9;

struct Pt {
  double x, y;
};

inline std::vector<Pt> part_coords(const Partition& u, int id) {
  const int m = u.circle_size();
  std::vector<Pt> pts;
  for (int k : u.circle_points_of_part(id))
    pts.push_back({std::cos(2.0 * M_PI * k / m), std::sin(2.0 * M_PI * k / m)});
  if (u.part_has_center(id)) pts.push_back({0.0, 0.0});
  return pts;
}

inline double cross(Pt o, Pt a, Pt b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  if (pts.size() < 3) return pts;
  std::vector<Pt> hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kTol) --k;
    hull[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

inline bool point_in_hull(Pt p, const std::vector<Pt>& hull) {
  if (hull.size() == 1)
    return std::abs(p.x - hull[0].x) < kTol && std::abs(p.y - hull[0].y) < kTol;
  if (hull.size() == 2) {
    double d = std::abs(cross(hull[0], hull[1], p));
    double lo_x = std::min(hull[0].x, hull[1].x) - kTol, hi_x = std::max(hull[0].x, hull[1].x) + kTol;
    double lo_y = std::min(hull[0].y, hull[1].y) - kTol, hi_y = std::max(hull[0].y, hull[1].y) + kTol;
    return d < kTol && p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
  }
  for (size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) < -kTol) return false;
  return true;
}

inline double seg_dist(Pt a, Pt b, Pt p) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double len2 = dx * dx + dy * dy;
  double t = len2 < kTol * kTol ? 0.0
                                : std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  double qx = a.x + t * dx - p.x, qy = a.y + t * dy - p.y;
  return std::sqrt(qx * qx + qy * qy);
}

inline bool segments_touch(Pt a, Pt b, Pt c, Pt d) {
  double d1 = cross(a, b, c), d2 = cross(a, b, d);
  double d3 = cross(c, d, a), d4 = cross(c, d, b);
  if (((d1 > kTol && d2 < -kTol) || (d1 < -kTol && d2 > kTol)) &&
      ((d3 > kTol && d4 < -kTol) || (d3 < -kTol && d4 > kTol)))
    return true;
  return seg_dist(a, b, c) < kTol || seg_dist(a, b, d) < kTol || seg_dist(c, d, a) < kTol ||
         seg_dist(c, d, b) < kTol;
}

/// Closed convex hulls intersect (within tolerance).
inline bool hulls_intersect(const std::vector<Pt>& A, const std::vector<Pt>& B) {
  std::vector<Pt> ha = convex_hull(A), hb = convex_hull(B);
  for (const Pt& p : ha)
    if (point_in_hull(p, hb)) return true;
  for (const Pt& p : hb)
    if (point_in_hull(p, ha)) return true;
  auto edges = [](const std::vector<Pt>& h) {
    std::vector<std::pair<Pt, Pt>> out;
    if (h.size() == 1) out.push_back({h[0], h[0]});
    for (size_t i = 0; i < h.size() && h.size() >= 2; ++i)
      out.push_back({h[i], h[(i + 1) % h.size()]});
    return out;
  };
  for (const auto& [a, b] : edges(ha))
    for (const auto& [c, d] : edges(hb))
      if (segments_touch(a, b, c, d)) return true;
  return false;
}

/// Geometric non-crossing test for the whole partition.
inline bool noncrossing_by_geometry(const Partition& u) {
  for (int i = 0; i < u.part_count(); ++i)
    for (int j = i + 1; j < u.part_count(); ++j)
      if (hulls_intersect(part_coords(u, i), part_coords(u, j))) return false;
  return true;
}

// --- the recursive complement ------------------------------------------------

/// Complement of a single subset inside the convex gon it spans: parts are
/// the half-open arcs between consecutive elements.
inline std::vector<std::vector<int>> arc_parts(const std::vector<int>& b,
                                               const std::vector<int>& a) {
  // b: the ambient part, ascending = cyclic order; a: subset of b
  std::vector<int> pos;  // indices of a inside b
  for (size_t i = 0; i < b.size(); ++i)
    if (std::find(a.begin(), a.end(), b[i]) != a.end()) pos.push_back((int)i);
  std::vector<std::vector<int>> parts;
  const int k = (int)pos.size();
  for (int i = 0; i < k; ++i) {
    std::vector<int> arc;  // ]a_i, a_{i+1}]
    int from = pos[i], to = pos[(i + 1) % k];
    for (int j = (from + 1) % (int)b.size();; j = (j + 1) % (int)b.size()) {
      arc.push_back(b[j]);
      if (j == to) break;
    }
    parts.push_back(arc);
  }
  return parts;
}

/// Recursive Kreweras complement on the convex m-gon, used as the oracle for
/// the successor-permutation implementation.
inline Partition recursive_complement(const Partition& u, const Partition& v) {
  const int m = u.circle_size();
  std::vector<std::vector<int>> nonsingleton;
  for (const auto& part : u.parts())
    if (part.size() >= 2) nonsingleton.push_back(part);
  if (nonsingleton.empty()) return v;
  if (nonsingleton.size() == 1) {
    const auto& a = nonsingleton[0];
    std::vector<int> b = v.parts()[v.part_of(a[0])];
    std::vector<std::vector<int>> parts;
    for (const auto& part : v.parts())
      if (part != b) parts.push_back(part);
    for (auto& arc : arc_parts(b, a)) parts.push_back(arc);
    return Partition::from_parts(m, false, parts);
  }
  // split off the first non-singleton part
  std::vector<std::vector<int>> only{nonsingleton[0]};
  Partition u2 = Partition::from_parts(m, false, only);
  std::vector<std::vector<int>> rest(nonsingleton.begin() + 1, nonsingleton.end());
  Partition u1 = Partition::from_parts(m, false, rest);
  return recursive_complement(u1, recursive_complement(u2, v));
}

}  // namespace oracle

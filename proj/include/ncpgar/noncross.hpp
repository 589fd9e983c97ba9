#pragma once

#include <vector>

#include "ncpgar/partition.hpp"

namespace ncpgar {

/// Counterclockwise steps from a to b on an m-point circle.
inline int cyc_dist(int a, int b, int m) { return mod(b - a, m); }

/// The unique maximal counterclockwise gap of a sorted point set, as
/// (gap length, index of the point opening the gap). Ties resolved by the
/// first occurrence; callers that need uniqueness only use gaps > m/2.
struct CircleArc {
  int gap = 0;    // steps of the widest gap
  int first = 0;  // first point of the covering arc (point after the gap)
  int last = 0;   // last point of the covering arc (point before the gap)
};

inline CircleArc widest_gap(const std::vector<int>& sorted, int m) {
  CircleArc arc;
  const int k = (int)sorted.size();
  if (k == 1) return {m, sorted[0], sorted[0]};
  for (int i = 0; i < k; ++i) {
    int next = sorted[(i + 1) % k];
    int g = cyc_dist(sorted[i], next, m);
    if (g > arc.gap) {
      arc.gap = g;
      arc.last = sorted[i];
      arc.first = next;
    }
  }
  return arc;
}

/// Closed convex hull of a circle point set contains the origin.
/// Combinatorially: at least two points and no gap wider than half a turn
/// (an exact half-turn gap is an antipodal chord through the origin).
inline bool hull_contains_origin(const std::vector<int>& sorted, int m) {
  if (sorted.size() < 2) return false;
  return 2 * widest_gap(sorted, m).gap <= m;
}

/// Cyclic interleaving x1 y1 x2 y2 of two disjoint circle point sets.
inline bool interleaved(const std::vector<int>& a, const std::vector<int>& b, int m) {
  if (a.size() < 2 || b.size() < 2) return false;
  std::vector<std::pair<int, int>> merged;  // (position, tag)
  merged.reserve(a.size() + b.size());
  for (int x : a) merged.emplace_back(x, 0);
  for (int x : b) merged.emplace_back(x, 1);
  std::sort(merged.begin(), merged.end());
  int boundaries = 0;
  const int k = (int)merged.size();
  for (int i = 0; i < k; ++i)
    if (merged[i].second != merged[(i + 1) % k].second) ++boundaries;
  (void)m;
  return boundaries >= 4;
}

/// Crossing test for two distinct parts of a partition of mu_m (+ center).
/// Decided combinatorially:
///   (1) two center-free parts cross iff their point sets interleave;
///   (2) a center-free part whose closed hull contains the origin crosses
///       the part holding the center;
///   (3) the center's part crosses a center-free part B when one of its
///       circle points lies strictly inside B's covering arc;
///   (4) two center-free parts whose hulls both contain the origin cross.
inline bool parts_cross(const Partition& u, int pa, int pb) {
  const int m = u.circle_size();
  const bool ca = u.part_has_center(pa);
  const bool cb = u.part_has_center(pb);
  std::vector<int> a = u.circle_points_of_part(pa);
  std::vector<int> b = u.circle_points_of_part(pb);
  if (ca || cb) {
    const std::vector<int>& x = ca ? a : b;  // circle points alongside the center
    const std::vector<int>& y = ca ? b : a;  // the center-free part
    if (hull_contains_origin(y, m)) return true;
    if (y.size() >= 2) {
      CircleArc arc = widest_gap(y, m);
      int span = cyc_dist(arc.first, arc.last, m);
      for (int z : x)
        if (cyc_dist(arc.first, z, m) <= span) return true;
    }
    return false;
  }
  if (interleaved(a, b, m)) return true;
  if (hull_contains_origin(a, m) && hull_contains_origin(b, m)) return true;
  return false;
}

/// All pairs of distinct parts have disjoint convex hulls.
inline bool is_noncrossing(const Partition& u) {
  const int k = u.part_count();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (parts_cross(u, i, j)) return false;
  return true;
}

/// Enumerates set partitions of {0..count-1} via restricted growth strings.
template <typename Fn>
void for_each_set_partition(int count, Fn&& fn) {
  if (count <= 0) return;
  std::vector<int> rgs(count, 0);
  std::vector<int> maxi(count, 0);
  while (true) {
    fn(const_cast<const std::vector<int>&>(rgs));
    int i = count - 1;
    while (i > 0) {
      if (rgs[i] <= maxi[i - 1]) break;
      --i;
    }
    if (i == 0) return;
    ++rgs[i];
    maxi[i] = std::max(maxi[i - 1], rgs[i]);
    for (int j = i + 1; j < count; ++j) {
      rgs[j] = 0;
      maxi[j] = maxi[i];
    }
  }
}

}  // namespace ncpgar

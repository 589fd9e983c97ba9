#pragma once

#include <vector>

#include "ncpgar/noncross.hpp"
#include "ncpgar/partition.hpp"

namespace ncpgar {

// NCP(1,1,m): non-crossing partitions of an abstract convex m-gon whose
// vertices are the labels 0..m-1 in counterclockwise cyclic order. Carried
// by center-free Partition values.

inline bool is_polygon_partition(const Partition& u) { return !u.has_center(); }

inline bool is_polygon_member(const Partition& u) {
  return is_polygon_partition(u) && is_noncrossing(u);
}

/// sigma_u: each label maps to its counterclockwise successor inside its part.
inline std::vector<int> successor_perm(const Partition& u) {
  std::vector<int> succ(u.circle_size());
  for (const auto& part : u.parts()) {
    const int k = (int)part.size();
    for (int i = 0; i < k; ++i) succ[part[i]] = part[(i + 1) % k];
  }
  return succ;
}

inline Partition partition_from_cycles(int m, const std::vector<int>& perm) {
  std::vector<int> a(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    if (a[i] != -1) continue;
    for (int j = i; a[j] == -1; j = perm[j]) a[j] = next;
    ++next;
  }
  return Partition(m, false, std::move(a));
}

/// Kreweras complement u\v on the convex configuration, the unique w with
/// sigma_u sigma_w = sigma_v (composing left to right). Parts of the result
/// are the cycles of y -> sigma_v(sigma_u^{-1}(y)).
inline Partition convex_complement(const Partition& u, const Partition& v) {
  if (!u.refines(v)) throw DomainError("complement requires u to refine v");
  const int m = u.circle_size();
  std::vector<int> su = successor_perm(u);
  std::vector<int> sv = successor_perm(v);
  std::vector<int> su_inv(m);
  for (int i = 0; i < m; ++i) su_inv[su[i]] = i;
  std::vector<int> w(m);
  for (int y = 0; y < m; ++y) w[y] = sv[su_inv[y]];
  return partition_from_cycles(m, w);
}

/// Least non-crossing coarsening of the set-partition join.
inline Partition polygon_join(const Partition& u, const Partition& v) {
  Partition w = u.join_sets(v);
  for (bool changed = true; changed;) {
    changed = false;
    const int k = w.part_count();
    for (int i = 0; i < k && !changed; ++i)
      for (int j = i + 1; j < k && !changed; ++j)
        if (parts_cross(w, i, j)) {
          std::vector<int> a = w.assignment();
          for (int& x : a)
            if (x == j) x = i;
          w = Partition(w.circle_size(), w.has_center(), std::move(a));
          changed = true;
        }
  }
  return w;
}

inline std::vector<Partition> enumerate_polygon_members(int m) {
  std::vector<Partition> out;
  for_each_set_partition(m, [&](const std::vector<int>& rgs) {
    Partition u(m, false, rgs);
    if (is_noncrossing(u)) out.push_back(u);
    if ((long long)out.size() > size_guard())
      throw SizeGuardError("polygon lattice exceeds size guard");
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpgar

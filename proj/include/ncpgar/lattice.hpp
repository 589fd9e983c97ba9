#pragma once

#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "ncpgar/convex.hpp"
#include "ncpgar/noncross.hpp"
#include "ncpgar/partition.hpp"

namespace ncpgar {

// The lattice NCP(e,e,n+1): non-crossing partitions of mu_en together with
// the center, whose circle restriction is mu_e-invariant. Multiplication by
// zeta_e acts on circle indices as k -> k+n.

enum class SymmetryClass { ShortSymmetric, LongSymmetric, Asymmetric };

inline bool carrier_matches(const Params& P, const Partition& u) {
  return u.circle_size() == P.circle() && u.has_center();
}

/// Circle restriction: forget the center point.
inline Partition flat_of(const Partition& u) {
  std::vector<int> a(u.assignment().begin(), u.assignment().end() - 1);
  return Partition(u.circle_size(), false, std::move(a));
}

/// Membership in NCP(e,1,n): mu_e-invariant non-crossing partition of mu_en.
inline bool is_flat_member(const Params& P, const Partition& w) {
  if (w.circle_size() != P.circle() || w.has_center()) return false;
  if (w.rotated(P.n) != w) return false;
  return is_noncrossing(w);
}

inline bool is_member(const Params& P, const Partition& u) {
  if (!carrier_matches(P, u)) return false;
  if (!is_noncrossing(u)) return false;
  return is_flat_member(P, flat_of(u));
}

inline void require_member(const Params& P, const Partition& u) {
  if (!is_member(P, u)) throw DomainError("partition is not a member of NCP(e,e,n+1)");
}

/// A flat member is long when one part (necessarily unique) has the origin
/// in its closed hull.
inline int flat_long_part(const Partition& w) {
  for (int id = 0; id < w.part_count(); ++id)
    if (hull_contains_origin(w.circle_points_of_part(id), w.circle_size())) return id;
  return -1;
}

inline bool flat_is_long(const Partition& w) { return flat_long_part(w) >= 0; }

inline SymmetryClass classify(const Params& P, const Partition& u) {
  require_member(P, u);
  if (flat_is_long(flat_of(u))) return SymmetryClass::LongSymmetric;
  int cp = u.part_of(u.center());
  bool center_alone = u.circle_points_of_part(cp).empty();
  return center_alone ? SymmetryClass::ShortSymmetric : SymmetryClass::Asymmetric;
}

inline int height(const Params& P, const Partition& u) {
  const int m = u.part_count();
  switch (classify(P, u)) {
    case SymmetryClass::ShortSymmetric:
      return P.n - (m - 1) / P.e;
    case SymmetryClass::Asymmetric:
      return P.n + 1 - m / P.e;
    case SymmetryClass::LongSymmetric:
      return P.n + 1 - (m - 1) / P.e;
  }
  throw Error("unreachable");
}

inline Partition rotate(const Params& P, const Partition& u, int k) {
  require_member(P, u);
  return u.rotated(k);
}

// --- height 1 elements and the extreme asymmetric elements ----------------

/// u_{p,q}: non-singleton parts are the mu_e-orbit of {p, q}.
inline Partition atom_sym(const Params& P, int p, int q) {
  const int m = P.circle();
  int d = mod(q - p, m);
  if (d > m - d) {
    std::swap(p, q);
    d = m - d;
  }
  if (d <= 0 || d >= P.n)
    throw DomainError("atom_sym requires indices with 0 < |p-q| < n");
  std::vector<std::vector<int>> parts;
  for (int i = 0; i < P.e; ++i)
    parts.push_back({mod(p + i * P.n, m), mod(p + d + i * P.n, m)});
  return Partition::from_parts(m, true, parts);
}

/// u_p = m_{zeta^p}: unique non-singleton part {center, p}.
inline Partition atom_asym(const Params& P, int p) {
  const int m = P.circle();
  return Partition::from_parts(m, true, {{mod(p, m), m}});
}

inline Partition min_asym(const Params& P, int p) { return atom_asym(P, p); }

/// M_{zeta^p}: asymmetric part {center, p+1, ..., p+n} plus its
/// zeta_e-translates with the center removed.
inline Partition max_asym(const Params& P, int p) {
  const int m = P.circle();
  std::vector<std::vector<int>> parts;
  std::vector<int> head{m};
  for (int i = 1; i <= P.n; ++i) head.push_back(mod(p + i, m));
  parts.push_back(head);
  for (int j = 1; j < P.e; ++j) {
    std::vector<int> tail;
    for (int i = 1; i <= P.n; ++i) tail.push_back(mod(p + i + j * P.n, m));
    parts.push_back(tail);
  }
  return Partition::from_parts(m, true, parts);
}

inline std::vector<Partition> height_one_members(const Params& P) {
  std::vector<Partition> out;
  for (int p = 0; p < P.n; ++p)
    for (int d = 1; d < P.n; ++d) out.push_back(atom_sym(P, p, p + d));
  for (int p = 0; p < P.circle(); ++p) out.push_back(atom_asym(P, p));
  std::set<Partition> dedup(out.begin(), out.end());
  return {dedup.begin(), dedup.end()};
}

// --- meet and join ---------------------------------------------------------

inline Partition meet(const Params& P, const Partition& u, const Partition& v) {
  require_member(P, u);
  require_member(P, v);
  return u.meet_sets(v);  // NCP(e,e,n+1) is closed under common refinement
}

namespace detail {

/// Monotone closure: force mu_e-equivariance of the circle relation and merge
/// crossing parts, until a fixpoint. Works for both carriers (with center and
/// without); every merge is forced in any member coarsening the input.
inline Partition member_closure(const Params& P, Partition w) {
  const int m = P.circle();
  for (bool changed = true; changed;) {
    changed = false;
    // equivariance: x ~ y forces zeta_e x ~ zeta_e y
    std::vector<std::vector<int>> parts = w.parts();
    for (const auto& part : parts) {
      std::vector<int> circle;
      for (int x : part)
        if (x < m) circle.push_back(x);
      for (size_t i = 1; i < circle.size(); ++i) {
        int x = mod(circle[0] + P.n, m), y = mod(circle[i] + P.n, m);
        if (!w.same_part(x, y)) {
          std::vector<int> a = w.assignment();
          int keep = a[x], drop = a[y];
          for (int& t : a)
            if (t == drop) t = keep;
          w = Partition(w.circle_size(), w.has_center(), std::move(a));
          changed = true;
        }
      }
      if (changed) break;
    }
    if (changed) continue;
    // crossing closure: intersecting hulls must merge
    const int k = w.part_count();
    for (int i = 0; i < k && !changed; ++i)
      for (int j = i + 1; j < k && !changed; ++j)
        if (parts_cross(w, i, j)) {
          std::vector<int> a = w.assignment();
          for (int& t : a)
            if (t == j) t = i;
          w = Partition(w.circle_size(), w.has_center(), std::move(a));
          changed = true;
        }
  }
  return w;
}

}  // namespace detail

inline Partition join(const Params& P, const Partition& u, const Partition& v) {
  require_member(P, u);
  require_member(P, v);
  return detail::member_closure(P, u.join_sets(v));
}

inline Partition flat_join(const Params& P, const Partition& u, const Partition& v) {
  if (!is_flat_member(P, u) || !is_flat_member(P, v))
    throw DomainError("flat_join requires members of NCP(e,1,n)");
  return detail::member_closure(P, u.join_sets(v));
}

// --- enumeration -----------------------------------------------------------

/// All members, via join-closure of the discrete partition under the
/// height 1 elements.
inline std::vector<Partition> enumerate_members(const Params& P) {
  const auto atoms = height_one_members(P);
  std::set<Partition> seen;
  std::queue<Partition> todo;
  Partition disc = Partition::discrete(P.circle(), true);
  seen.insert(disc);
  todo.push(disc);
  while (!todo.empty()) {
    Partition u = todo.front();
    todo.pop();
    for (const auto& a : atoms) {
      Partition w = join(P, u, a);
      if (seen.insert(w).second) {
        if ((long long)seen.size() > size_guard())
          throw SizeGuardError("lattice enumeration exceeds size guard");
        todo.push(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

/// Oracle path: filter all set partitions of mu_en + center.
inline std::vector<Partition> enumerate_members_brute(const Params& P) {
  if (P.circle() + 1 > 13) throw SizeGuardError("brute-force member enumeration capped at 13 points");
  std::vector<Partition> out;
  for_each_set_partition(P.circle() + 1, [&](const std::vector<int>& rgs) {
    Partition u(P.circle(), true, rgs);
    if (is_member(P, u)) out.push_back(u);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Partition> enumerate_flat_members(const Params& P) {
  std::vector<Partition> out;
  for (const auto& u : enumerate_members(P)) {
    SymmetryClass c = classify(P, u);
    if (c != SymmetryClass::Asymmetric) out.push_back(flat_of(u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ncpgar

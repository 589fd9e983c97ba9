#pragma once

#include <vector>

#include "ncpgar/convex.hpp"
#include "ncpgar/lattice.hpp"

namespace ncpgar {

// Complement machinery: the maps flat / star / sharp between NCP(e,e,n+1)
// and NCP(e,1,n), the interval isomorphisms onto NCP(1,1,n+1), and the
// complement u\v with its three defining cases.

/// Section of flat: short flats gain an isolated center, long flats absorb
/// the center into the long part.
inline Partition star(const Params& P, const Partition& w) {
  if (!is_flat_member(P, w)) throw DomainError("star requires a member of NCP(e,1,n)");
  const int m = P.circle();
  std::vector<int> a = w.assignment();
  int lp = flat_long_part(w);
  a.push_back(lp >= 0 ? lp : w.part_count());
  return Partition(m, true, std::move(a));
}

/// u^sharp: for asymmetric u, close the center's part under the mu_e action
/// and drop the center; symmetric u just loses the center.
inline Partition sharp(const Params& P, const Partition& u) {
  require_member(P, u);
  const int m = P.circle();
  Partition fl = flat_of(u);
  if (classify(P, u) != SymmetryClass::Asymmetric) return fl;
  std::vector<int> seed = u.circle_points_of_part(u.part_of(u.center()));
  std::vector<int> a = fl.assignment();
  const int target = a[seed[0]];
  for (int x : seed)
    for (int j = 0; j < P.e; ++j) {
      int drop = a[mod(x + j * P.n, m)];
      if (drop == target) continue;
      for (int& t : a)
        if (t == drop) t = target;
    }
  return Partition(m, false, std::move(a));
}

// --- the intervals [disc, M_zeta] and [m_zeta, triv] -----------------------

/// Points of a_zeta for zeta = zeta_en^p, in the convex cyclic order used
/// throughout: circle points p+1, ..., p+n, then the center.
inline std::vector<int> a_zeta_points(const Params& P, int p) {
  std::vector<int> pts;
  for (int i = 1; i <= P.n; ++i) pts.push_back(mod(p + i, P.circle()));
  pts.push_back(P.circle());  // center as the last convex vertex
  return pts;
}

/// phi_zeta: restriction of [disc, M_zeta] onto the convex (n+1)-gon a_zeta.
inline Partition phi(const Params& P, int p, const Partition& u) {
  require_member(P, u);
  if (!u.refines(max_asym(P, p))) throw DomainError("phi requires u inside [disc, M_zeta]");
  return u.restricted(a_zeta_points(P, p));
}

/// psi_zeta: restriction of [m_zeta, triv] onto the same convex gon.
inline Partition psi(const Params& P, int p, const Partition& u) {
  require_member(P, u);
  if (!min_asym(P, p).refines(u)) throw DomainError("psi requires u inside [m_zeta, triv]");
  return u.restricted(a_zeta_points(P, p));
}

/// Inverse of phi_zeta: equivariant completion, the partition of
/// zeta' a_zeta - {0} being the zeta'-translate of the given one.
inline Partition phi_inv(const Params& P, int p, const Partition& poly) {
  if (poly.circle_size() != P.n + 1 || poly.has_center())
    throw DomainError("phi_inv expects a partition of the (n+1)-gon");
  const int m = P.circle();
  std::vector<int> pts = a_zeta_points(P, p);
  std::vector<std::vector<int>> parts;
  for (const auto& part : poly.parts()) {
    std::vector<int> real;
    for (int label : part) real.push_back(pts[label]);
    parts.push_back(real);
    for (int j = 1; j < P.e; ++j) {
      std::vector<int> shifted;
      for (int label : part) {
        if (label == P.n) continue;  // the center has no translates
        shifted.push_back(mod(pts[label] + j * P.n, m));
      }
      if (!shifted.empty()) parts.push_back(shifted);
    }
  }
  Partition u = Partition::from_parts(m, true, parts);
  require_member(P, u);
  return u;
}

/// Complement inside NCP(e,1,n), inherited from the convex en-gon.
inline Partition flat_complement(const Params& P, const Partition& u, const Partition& v) {
  if (!is_flat_member(P, u) || !is_flat_member(P, v))
    throw DomainError("flat_complement requires members of NCP(e,1,n)");
  return convex_complement(u, v);
}

/// The complement u\v in NCP(e,e,n+1).
inline Partition complement(const Params& P, const Partition& u, const Partition& v) {
  require_member(P, u);
  require_member(P, v);
  if (!u.refines(v)) throw DomainError("complement requires u to refine v");
  const SymmetryClass cu = classify(P, u), cv = classify(P, v);
  if (cv == SymmetryClass::Asymmetric) {
    for (int p = 0; p < P.circle(); ++p) {
      if (!v.refines(max_asym(P, p))) continue;
      return phi_inv(P, p, convex_complement(phi(P, p, u), phi(P, p, v)));
    }
    throw Error("asymmetric v admits no enclosing M_zeta");  // cannot happen
  }
  if (cu == SymmetryClass::Asymmetric) {
    for (int p = 0; p < P.circle(); ++p) {
      if (!min_asym(P, p).refines(u)) continue;
      return phi_inv(P, p, convex_complement(psi(P, p, u), psi(P, p, v)));
    }
    throw Error("asymmetric u admits no m_zeta below it");  // cannot happen
  }
  return star(P, flat_complement(P, flat_of(u), flat_of(v)));
}

/// bar(u) = u \ triv, a poset anti-automorphism.
inline Partition bar(const Params& P, const Partition& u) {
  return complement(P, u, Partition::trivial(P.circle(), true));
}

/// E: NCP(e,1,n) -> NCP(1,1,n), parts mapped through z -> z^e
/// (circle index k -> k mod n).
inline Partition e_map(const Params& P, const Partition& w) {
  if (!is_flat_member(P, w)) throw DomainError("e_map requires a member of NCP(e,1,n)");
  std::vector<int> uf(P.n);
  for (int i = 0; i < P.n; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const auto& part : w.parts())
    for (size_t i = 1; i < part.size(); ++i)
      uf[find(mod(part[i], P.n))] = find(mod(part[0], P.n));
  std::vector<int> a(P.n);
  for (int i = 0; i < P.n; ++i) a[i] = find(i);
  return Partition(P.n, false, std::move(a));
}

}  // namespace ncpgar

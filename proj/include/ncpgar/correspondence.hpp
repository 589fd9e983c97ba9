#pragma once

#include <optional>
#include <vector>

#include "ncpgar/kreweras.hpp"
#include "ncpgar/lattice.hpp"
#include "ncpgar/reflection.hpp"

namespace ncpgar {

// The mutually inverse maps u -> g_u and g -> u_g between NCP(e,e,n+1) and
// P_G = {g : g <=_T c}, via the basepoint x_0 = (0, zeta_en, ..., zeta_en^n).

namespace detail {

/// Successor of every point inside its part, for the counterclockwise
/// ordering of the part. On the long part the ordering runs over the
/// non-zero elements and the center is fixed; on an asymmetric part the
/// center is a hull vertex between the two ends of the covering arc.
inline std::vector<int> successor_map(const Params& P, const Partition& u) {
  const int m = P.circle();
  const bool lng = classify(P, u) == SymmetryClass::LongSymmetric;
  std::vector<int> succ(m + 1);
  for (int id = 0; id < u.part_count(); ++id) {
    std::vector<int> circle = u.circle_points_of_part(id);
    const bool has_c = u.part_has_center(id);
    if (!has_c || lng) {
      // plain cyclic order on the circle points; center (if present) fixed
      const int k = (int)circle.size();
      for (int i = 0; i < k; ++i) succ[circle[i]] = circle[(i + 1) % k];
      if (has_c) succ[m] = m;
      continue;
    }
    if (circle.empty()) {
      succ[m] = m;
      continue;
    }
    // asymmetric part: center -> first arc point -> ... -> last -> center
    CircleArc arc = widest_gap(circle, m);
    std::sort(circle.begin(), circle.end(), [&](int a, int b) {
      return cyc_dist(arc.first, a, m) < cyc_dist(arc.first, b, m);
    });
    succ[m] = circle.front();
    for (size_t i = 0; i + 1 < circle.size(); ++i) succ[circle[i]] = circle[i + 1];
    succ[circle.back()] = m;
  }
  return succ;
}

}  // namespace detail

/// g_u: solve g . x_0 = y for the endpoint vector y of the motion that sends
/// every point to its successor (with the special coordinate of an
/// asymmetric u translated back onto the zero entry).
inline GroupElement g_of(const Params& P, const Partition& u) {
  require_member(P, u);
  const int m = P.circle();
  std::vector<int> succ = detail::successor_map(P, u);

  // endpoint coordinates: exponent on the circle, or absent for the value 0
  std::vector<std::optional<int>> y(P.n + 1);
  y[0] = (succ[m] == m) ? std::nullopt : std::optional<int>(succ[m]);
  int special = -1;
  for (int z = 0; z < m; ++z) {
    if (succ[z] == m) {
      special = (z % P.n == 0) ? P.n : z % P.n;
      y[special] = std::nullopt;
    }
  }
  for (int j = 1; j <= P.n; ++j) {
    if (j == special) continue;
    y[j] = succ[j];
  }

  GroupElement g = identity(P);
  int zero_at = -1;
  for (int i = 0; i <= P.n; ++i)
    if (!y[i]) {
      if (zero_at != -1) throw Error("endpoint vector has two zero entries");
      zero_at = i;
    }
  g.perm[0] = zero_at;
  std::vector<bool> used(P.n + 1, false);
  used[0] = true;
  for (int i = 0; i <= P.n; ++i) {
    if (i == zero_at) continue;
    const int val = *y[i];
    int j = (val % P.n == 0) ? P.n : val % P.n;  // coset representative in 1..n
    if (used[j]) throw Error("endpoint vector is not a system of coset representatives");
    used[j] = true;
    g.perm[j] = i;
    g.exps[j] = mod((val - j) / P.n, P.e);
  }
  int sum = 0;
  for (int j = 1; j <= P.n; ++j) sum += g.exps[j];
  g.exps[0] = mod(-sum, P.e);
  return g;
}

/// Height 1 members together with their group images, built once per Params.
struct AtomTable {
  Params params;
  std::vector<Partition> atoms;
  std::vector<GroupElement> images;

  explicit AtomTable(const Params& P) : params(P), atoms(height_one_members(P)) {
    images.reserve(atoms.size());
    for (const auto& a : atoms) images.push_back(g_of(P, a));
  }
};

/// u_g: join of the height 1 members whose reflections fix ker(g-1)
/// pointwise; present exactly when g lies in P_G.
inline std::optional<Partition> u_of(const AtomTable& T, const GroupElement& g) {
  const Params& P = T.params;
  std::vector<FixedVector> basis = fixed_basis(g);
  Partition u = Partition::discrete(P.circle(), true);
  for (size_t i = 0; i < T.atoms.size(); ++i)
    if (fixes_all(T.images[i], basis)) u = join(P, u, T.atoms[i]);
  if (height(P, u) != codim(g)) return std::nullopt;
  if (!(g_of(P, u) == g)) return std::nullopt;
  return u;
}

inline bool in_P_G(const AtomTable& T, const GroupElement& g) {
  return u_of(T, g).has_value();
}

}  // namespace ncpgar

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ncpgar/params.hpp"

namespace ncpgar {

/// Element of G(e,e,n+1) as a monomial matrix: a permutation sigma of
/// {0..n} with exponents k_i mod e, acting by g . e_i = zeta_e^{k_i} e_{sigma(i)}.
/// The entry product condition reads sum k_i = 0 (mod e).
struct GroupElement {
  Params params;
  std::vector<int> perm;
  std::vector<int> exps;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.params == b.params && a.perm == b.perm && a.exps == b.exps;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.exps < b.exps;
  }
};

inline GroupElement identity(const Params& P) {
  GroupElement g{P, std::vector<int>(P.rank()), std::vector<int>(P.rank(), 0)};
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

inline GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (!(a.params == b.params)) throw DomainError("group elements with different params");
  const int r = a.params.rank();
  GroupElement g{a.params, std::vector<int>(r), std::vector<int>(r)};
  for (int i = 0; i < r; ++i) {
    g.perm[i] = a.perm[b.perm[i]];
    g.exps[i] = mod(b.exps[i] + a.exps[b.perm[i]], a.params.e);
  }
  return g;
}

inline GroupElement inv(const GroupElement& a) {
  const int r = a.params.rank();
  GroupElement g{a.params, std::vector<int>(r), std::vector<int>(r)};
  for (int i = 0; i < r; ++i) {
    g.perm[a.perm[i]] = i;
    g.exps[a.perm[i]] = mod(-a.exps[i], a.params.e);
  }
  return g;
}

inline GroupElement power(GroupElement g, long long k) {
  GroupElement acc = identity(g.params);
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  while (k--) acc = mul(acc, g);
  return acc;
}

/// The reflection fixing the hyperplane X_i = zeta_e^m X_j.
inline GroupElement reflection(const Params& P, int i, int j, int m) {
  if (i == j || i < 0 || j < 0 || i > P.n || j > P.n)
    throw DomainError("reflection requires distinct indices in 0..n");
  GroupElement g = identity(P);
  g.perm[i] = j;
  g.perm[j] = i;
  g.exps[i] = mod(-m, P.e);
  g.exps[j] = mod(m, P.e);
  return g;
}

inline std::vector<GroupElement> all_reflections(const Params& P) {
  std::vector<GroupElement> out;
  for (int i = 0; i <= P.n; ++i)
    for (int j = i + 1; j <= P.n; ++j)
      for (int m = 0; m < P.e; ++m) out.push_back(reflection(P, i, j, m));
  return out;
}

/// The regular element of order ne used as Coxeter-like element:
/// e_0 -> zeta_e^{-1} e_0, e_1 -> zeta_e e_n, e_j -> e_{j-1} for j >= 2.
inline GroupElement coxeter_c(const Params& P) {
  GroupElement g = identity(P);
  g.exps[0] = mod(-1, P.e);
  if (P.n >= 1) {
    g.perm[1] = P.n;
    g.exps[1] = mod(1, P.e);
    for (int j = 2; j <= P.n; ++j) g.perm[j] = j - 1;
  }
  return g;
}

// --- generalised cycles and fixed spaces -----------------------------------

struct GenCycle {
  std::vector<int> support;  // cyclically ordered: support[i+1] = sigma(support[i])
  int coeff_sum = 0;         // sum of exponents along the cycle, mod e
};

inline std::vector<GenCycle> gen_cycles(const GroupElement& g) {
  const int r = g.params.rank();
  std::vector<GenCycle> out;
  std::vector<bool> seen(r, false);
  for (int i = 0; i < r; ++i) {
    if (seen[i]) continue;
    GenCycle c;
    for (int j = i; !seen[j]; j = g.perm[j]) {
      seen[j] = true;
      c.support.push_back(j);
      c.coeff_sum = mod(c.coeff_sum + g.exps[j], g.params.e);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// A fixed vector with entries zeta_e^{m} (stored as exponents) on one
/// zero-sum generalised cycle, absent entries elsewhere.
struct FixedVector {
  std::vector<std::optional<int>> entry;  // exponent mod e, per coordinate
};

inline std::vector<FixedVector> fixed_basis(const GroupElement& g) {
  const int r = g.params.rank();
  std::vector<FixedVector> basis;
  for (const auto& c : gen_cycles(g)) {
    if (c.coeff_sum != 0) continue;
    FixedVector v;
    v.entry.assign(r, std::nullopt);
    // walk the cycle so that g . v = v: v[sigma(i)] = v[i] + k_i
    int i0 = c.support.front();
    int acc = 0;
    int j = i0;
    do {
      v.entry[j] = acc;
      acc = mod(acc + g.exps[j], g.params.e);
      j = g.perm[j];
    } while (j != i0);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline int codim(const GroupElement& g) {
  int zero_cycles = 0;
  for (const auto& c : gen_cycles(g))
    if (c.coeff_sum == 0) ++zero_cycles;
  return g.params.rank() - zero_cycles;
}

/// Whether g v = v for a formal root-of-unity vector.
inline bool fixes(const GroupElement& g, const FixedVector& v) {
  const int r = g.params.rank();
  for (int i = 0; i < r; ++i) {
    const auto& src = v.entry[i];
    const auto& dst = v.entry[g.perm[i]];
    if (src.has_value() != dst.has_value()) return false;
    if (src && mod(*src + g.exps[i], g.params.e) != *dst) return false;
  }
  return true;
}

inline bool fixes_all(const GroupElement& g, const std::vector<FixedVector>& vs) {
  for (const auto& v : vs)
    if (!fixes(g, v)) return false;
  return true;
}

// --- whole-group tables: reflection length and the absolute order ----------

inline uint64_t element_key(const GroupElement& g) {
  const int base = g.params.rank() * g.params.e;
  uint64_t key = 0;
  for (int i = 0; i < g.params.rank(); ++i)
    key = key * (uint64_t)base + (uint64_t)(g.perm[i] * g.params.e + g.exps[i]);
  return key;
}

/// BFS tables over the full group; desk scale only (guarded).
class GroupTable {
 public:
  explicit GroupTable(const Params& P) : params_(P) {
    if (P.group_order() > size_guard())
      throw SizeGuardError("group order exceeds size guard");
    reflections_ = all_reflections(P);
    enumerate();
    bfs();
  }

  const Params& params() const { return params_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<GroupElement>& reflections() const { return reflections_; }

  int l_T(const GroupElement& g) const {
    auto it = dist_.find(element_key(g));
    if (it == dist_.end()) throw DomainError("element outside the enumerated group");
    return it->second;
  }

  bool leq_T(const GroupElement& g, const GroupElement& h) const {
    return l_T(g) + l_T(mul(inv(g), h)) == l_T(h);
  }

  /// All minimal-length reflection factorisations of g.
  std::vector<std::vector<GroupElement>> red_T(const GroupElement& g) const {
    std::vector<std::vector<GroupElement>> out;
    std::vector<GroupElement> prefix;
    red_T_rec(g, l_T(g), prefix, out);
    return out;
  }

  /// {g : g <=_T c}, grown layer by layer along reduced decompositions of c.
  std::vector<GroupElement> divisors_of_coxeter() const {
    GroupElement c = coxeter_c(params_);
    const int lc = l_T(c);
    std::map<uint64_t, GroupElement> layer, all;
    GroupElement id = identity(params_);
    layer.emplace(element_key(id), id);
    all = layer;
    for (int k = 0; k < lc; ++k) {
      std::map<uint64_t, GroupElement> next;
      for (const auto& [key, g] : layer) {
        for (const auto& t : reflections_) {
          GroupElement h = mul(g, t);
          if (l_T(h) != k + 1) continue;
          if (l_T(h) + l_T(mul(inv(h), c)) != lc) continue;
          next.emplace(element_key(h), h);
        }
      }
      for (const auto& kv : next) all.insert(kv);
      layer = std::move(next);
    }
    std::vector<GroupElement> out;
    for (auto& [key, g] : all) out.push_back(g);
    return out;
  }

 private:
  void enumerate() {
    const int r = params_.rank();
    std::vector<int> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> exps(r, 0);
      long long count = 1;
      for (int i = 1; i < r; ++i) count *= params_.e;
      for (long long idx = 0; idx < count; ++idx) {
        long long t = idx;
        int sum = 0;
        for (int i = 1; i < r; ++i) {
          exps[i] = (int)(t % params_.e);
          t /= params_.e;
          sum += exps[i];
        }
        exps[0] = mod(-sum, params_.e);
        elements_.push_back(GroupElement{params_, perm, exps});
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  void bfs() {
    dist_.reserve(elements_.size() * 2);
    std::vector<GroupElement> layer{identity(params_)};
    dist_.emplace(element_key(layer[0]), 0);
    int d = 0;
    while (!layer.empty()) {
      std::vector<GroupElement> next;
      for (const auto& g : layer)
        for (const auto& t : reflections_) {
          GroupElement h = mul(g, t);
          if (dist_.emplace(element_key(h), d + 1).second) next.push_back(std::move(h));
        }
      layer = std::move(next);
      ++d;
    }
  }

  void red_T_rec(const GroupElement& g, int len, std::vector<GroupElement>& prefix,
                 std::vector<std::vector<GroupElement>>& out) const {
    if (len == 0) {
      out.push_back(prefix);
      return;
    }
    for (const auto& t : reflections_) {
      GroupElement rest = mul(inv(t), g);
      if (l_T(rest) != len - 1) continue;
      prefix.push_back(t);
      red_T_rec(rest, len - 1, prefix, out);
      prefix.pop_back();
    }
  }

  Params params_;
  std::vector<GroupElement> elements_;
  std::vector<GroupElement> reflections_;
  std::unordered_map<uint64_t, int> dist_;
};

/// Monomorphism G(e,1,n) -> G(e,e,n+1): block matrix with corner entry the
/// inverse determinant of the diagonal part. The argument is a monomial
/// matrix on indices 0..n-1 with unconstrained exponent sum.
inline GroupElement embed_psi(const Params& P, const std::vector<int>& perm,
                              const std::vector<int>& exps) {
  if ((int)perm.size() != P.n || (int)exps.size() != P.n)
    throw DomainError("embed_psi expects an element of G(e,1,n)");
  GroupElement g = identity(P);
  int sum = 0;
  for (int i = 0; i < P.n; ++i) {
    g.perm[i + 1] = perm[i] + 1;
    g.exps[i + 1] = mod(exps[i], P.e);
    sum += exps[i];
  }
  g.perm[0] = 0;
  g.exps[0] = mod(-sum, P.e);
  return g;
}

}  // namespace ncpgar

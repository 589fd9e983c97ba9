#pragma once

#include <set>
#include <vector>

#include "ncpgar/garside.hpp"
#include "ncpgar/reflection.hpp"

namespace ncpgar {

/// T-word: a sequence of reflections, the carrier of Red_T and the
/// Hurwitz action.
using ReflSeq = std::vector<GroupElement>;

/// sigma_i (1-indexed, 1 <= i < length): replaces (t_i, t_{i+1}) by
/// (t_i t_{i+1} t_i^{-1}, t_i); the inverse braids the other way.
inline ReflSeq hurwitz_sigma(int i, const ReflSeq& seq, bool inverse = false) {
  if (i < 1 || i >= (int)seq.size()) throw DomainError("hurwitz index out of range");
  ReflSeq out = seq;
  const GroupElement& s = seq[i - 1];
  const GroupElement& t = seq[i];
  if (!inverse) {
    out[i - 1] = mul(mul(s, t), inv(s));
    out[i] = s;
  } else {
    out[i - 1] = t;
    out[i] = mul(mul(inv(t), s), t);
  }
  return out;
}

namespace detail {

inline std::vector<uint64_t> seq_key(const ReflSeq& seq) {
  std::vector<uint64_t> k;
  k.reserve(seq.size());
  for (const auto& g : seq) k.push_back(element_key(g));
  return k;
}

}  // namespace detail

/// Orbit of a T-word under the braid group action, by closure under all
/// sigma_i^{+-1}.
inline std::vector<ReflSeq> hurwitz_orbit(const ReflSeq& seed) {
  std::set<std::vector<uint64_t>> seen{detail::seq_key(seed)};
  std::vector<ReflSeq> out{seed}, todo{seed};
  while (!todo.empty()) {
    ReflSeq cur = todo.back();
    todo.pop_back();
    for (int i = 1; i < (int)cur.size(); ++i)
      for (bool invflag : {false, true}) {
        ReflSeq nxt = hurwitz_sigma(i, cur, invflag);
        if (seen.insert(detail::seq_key(nxt)).second) {
          if ((long long)seen.size() > size_guard())
            throw SizeGuardError("hurwitz orbit exceeds size guard");
          out.push_back(nxt);
          todo.push_back(nxt);
        }
      }
  }
  return out;
}

/// beta = (sigma_1 ... sigma_{k-1})^{k} on k-term words is the full twist;
/// on Red_T(c) with k = n+1 it must act as term-by-term conjugation by c.
inline bool beta_acts_as_conjugation(const Params& P, const GroupTable& table) {
  GroupElement c = coxeter_c(P);
  bool ok = true;
  for (const auto& seq : table.red_T(c)) {
    ReflSeq cur = seq;
    const int k = (int)seq.size();
    for (int rep = 0; rep < k; ++rep)
      for (int i = 1; i < k; ++i) cur = hurwitz_sigma(i, cur);
    for (int i = 0; i < k; ++i)
      if (!(cur[i] == mul(mul(c, seq[i]), inv(c)))) ok = false;
  }
  return ok;
}

/// Delta^{en/gcd(e, n+1)} generates the center: it must commute with every
/// atom in the Garside engine.
inline bool center_commutes(const DualBraidMonoid& M) {
  const Params& P = M.params();
  int g = std::gcd(P.e, P.n + 1);
  CanonicalForm z = M.delta_power(P.circle() / g);
  for (const auto& a : M.atom_table().atoms) {
    CanonicalForm s = M.from_simple(a);
    if (!M.eq(M.mul(z, s), M.mul(s, z))) return false;
  }
  return true;
}

}  // namespace ncpgar

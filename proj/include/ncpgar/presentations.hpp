#pragma once

#include <set>
#include <string>
#include <vector>

#include "ncpgar/words.hpp"

namespace ncpgar {

// Atom sets, the explicit length-2 relation families R1..R6, the presentation
// of Theorem-style generators tau_2, tau_2', tau_3, ..., and the monoid
// identities used as regressions.

struct Relation {
  std::string family;
  BraidWord left, right;
};

namespace detail {

inline Token sym_tok(int p, int q) {
  Token t;
  t.kind = Token::Kind::SymAtom;
  t.p = p;
  t.q = q;
  return t;
}

inline Token asym_tok(int p) {
  Token t;
  t.kind = Token::Kind::AsymAtom;
  t.p = p;
  return t;
}

inline std::string word_key(const Params& P, const BraidWord& w) {
  std::string out;
  for (const Token& t : w) out += atom_name(P, atom_partition(P, t)) + " ";
  return out;
}

}  // namespace detail

/// Named height 1 generators: n(n-1) symmetric a[p,q] plus en asymmetric a[p].
inline std::vector<std::pair<std::string, Partition>> atoms(const Params& P) {
  std::vector<std::pair<std::string, Partition>> out;
  for (const auto& a : height_one_members(P)) out.emplace_back(atom_name(P, a), a);
  return out;
}

/// All instances of the defining length-2 relations, deduplicated.
inline std::vector<Relation> relations(const Params& P) {
  using detail::asym_tok;
  using detail::sym_tok;
  const int m = P.circle();
  std::vector<Relation> out;
  std::set<std::pair<std::string, std::string>> seen;
  auto emit = [&](const std::string& family, BraidWord l, BraidWord r) {
    auto kl = detail::word_key(P, l);
    auto kr = detail::word_key(P, r);
    if (kl == kr) return;
    auto key = kl < kr ? std::make_pair(kl, kr) : std::make_pair(kr, kl);
    if (!seen.insert(key).second) return;
    out.push_back(Relation{family, std::move(l), std::move(r)});
  };
  for (int p = 0; p < m; ++p) {
    for (int q = p + 1; q < p + P.n; ++q) {
      for (int r = q + 1; r < p + P.n; ++r) {
        for (int s = r + 1; s < p + P.n; ++s) {
          emit("R1", {sym_tok(p, q), sym_tok(r, s)}, {sym_tok(r, s), sym_tok(p, q)});
          emit("R2", {sym_tok(p, s), sym_tok(q, r)}, {sym_tok(q, r), sym_tok(p, s)});
        }
        emit("R3", {sym_tok(p, r), sym_tok(q, r)}, {sym_tok(q, r), sym_tok(p, q)});
        emit("R3", {sym_tok(q, r), sym_tok(p, q)}, {sym_tok(p, q), sym_tok(p, r)});
        emit("R4", {sym_tok(p, q), asym_tok(r)}, {asym_tok(r), sym_tok(p, q)});
      }
      emit("R5", {sym_tok(p, q), asym_tok(p)}, {asym_tok(p), asym_tok(q)});
      emit("R5", {asym_tok(p), asym_tok(q)}, {asym_tok(q), sym_tok(p, q)});
    }
  }
  for (int p = 0; p < P.n; ++p)
    for (int i = 0; i + 1 < P.e; ++i)
      emit("R6", {asym_tok(p + i * P.n), asym_tok(p + (i + 1) * P.n)},
           {asym_tok(p + (i + 1) * P.n), asym_tok(p + (i + 2) * P.n)});
  return out;
}

struct CheckLine {
  std::string name;
  bool pass = false;
};

inline std::vector<CheckLine> check_relations(const DualBraidMonoid& M) {
  std::vector<CheckLine> out;
  const Params& P = M.params();
  for (const auto& rel : relations(P)) {
    bool ok = M.eq(word_to_cf(M, rel.left), word_to_cf(M, rel.right));
    out.push_back({rel.family + ": " + detail::word_key(P, rel.left) + "= " +
                       detail::word_key(P, rel.right),
                   ok});
  }
  return out;
}

// --- the n+1 standard generators and their presentation --------------------

/// tau_2 = a[0], tau_2' = a[n], tau_i = a[i-3, i-2] for i = 3..n+1.
inline BraidWord standard_generator(const Params& P, int i, bool prime = false) {
  using detail::asym_tok;
  using detail::sym_tok;
  if (i == 2) return {prime ? asym_tok(P.n) : asym_tok(0)};
  if (i < 3 || i > P.n + 1) throw DomainError("generator index out of range");
  return {sym_tok(i - 3, i - 2)};
}

inline std::vector<Relation> bmr_relations(const Params& P) {
  auto gen = [&](int i) { return standard_generator(P, i)[0]; };
  Token t2 = gen(2);
  Token t2p = standard_generator(P, 2, true)[0];
  std::vector<Relation> out;
  // commuting pairs
  for (int i = 2; i <= P.n + 1; ++i)
    for (int j = i + 2; j <= P.n + 1; ++j)
      out.push_back({"commute", {gen(i), gen(j)}, {gen(j), gen(i)}});
  for (int j = 4; j <= P.n + 1; ++j)
    out.push_back({"commute'", {t2p, gen(j)}, {gen(j), t2p}});
  // <t2 t2'>^e = <t2' t2>^e
  BraidWord l, r;
  for (int k = 0; k < P.e; ++k) {
    l.push_back(k % 2 == 0 ? t2 : t2p);
    r.push_back(k % 2 == 0 ? t2p : t2);
  }
  out.push_back({"alternating", l, r});
  // braid relations
  for (int i = 2; i <= P.n; ++i)
    out.push_back({"braid", {gen(i), gen(i + 1), gen(i)}, {gen(i + 1), gen(i), gen(i + 1)}});
  if (P.n >= 2) {
    Token t3 = gen(3);
    out.push_back({"braid'", {t2p, t3, t2p}, {t3, t2p, t3}});
    out.push_back({"sextic",
                   {t3, t2, t2p, t3, t2, t2p},
                   {t2, t2p, t3, t2, t2p, t3}});
  }
  return out;
}

inline std::vector<CheckLine> bmr_check(const DualBraidMonoid& M) {
  std::vector<CheckLine> out;
  for (const auto& rel : bmr_relations(M.params())) {
    bool ok = M.eq(word_to_cf(M, rel.left), word_to_cf(M, rel.right));
    out.push_back({rel.family, ok});
  }
  return out;
}

/// The identity 2 1^k 3213 = 3213 2^k 1 with 1 = a[n], 2 = a[0], 3 = a[0,1].
inline bool section9_identity(const DualBraidMonoid& M, int k) {
  const Params& P = M.params();
  if (P.n < 2) throw DomainError("identity needs n >= 2");
  using detail::asym_tok;
  using detail::sym_tok;
  Token one = asym_tok(P.n), two = asym_tok(0), three = sym_tok(0, 1);
  BraidWord left{two};
  for (int i = 0; i < k; ++i) left.push_back(one);
  for (Token t : {three, two, one, three}) left.push_back(t);
  BraidWord right{three, two, one, three};
  for (int i = 0; i < k; ++i) right.push_back(two);
  right.push_back(one);
  return M.eq(word_to_cf(M, left), word_to_cf(M, right));
}

/// b_p = a_p a_{p+n}, generators of the embedded B(e,1,n).
inline std::vector<std::pair<std::string, CanonicalForm>> embed_b_generators(
    const DualBraidMonoid& M) {
  std::vector<std::pair<std::string, CanonicalForm>> out;
  for (int p = 0; p < M.params().n; ++p) {
    BraidWord w{detail::asym_tok(p), detail::asym_tok(p + M.params().n)};
    out.emplace_back("b" + std::to_string(p), word_to_cf(M, w));
  }
  return out;
}

/// Reflecting diagrams through an axis maps the relation set onto the
/// reversed relation set; witnesses that the monoid is anti-automorphic.
inline bool opposed_symmetry_check(const Params& P, int axis) {
  auto mirror_word = [&](const BraidWord& w) {
    BraidWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Partition mu = atom_partition(P, *it).mirrored(axis);
      // rebuild a token from the mirrored atom
      auto cpts = mu.circle_points_of_part(mu.part_of(mu.center()));
      Token t;
      if (cpts.size() == 1) {
        t = detail::asym_tok(cpts[0]);
      } else {
        for (int id = 0; id < mu.part_count(); ++id) {
          if (mu.part_has_center(id)) continue;
          auto pts = mu.circle_points_of_part(id);
          if (pts.size() == 2) {
            t = detail::sym_tok(pts[0], pts[1]);
            break;
          }
        }
      }
      out.push_back(t);
    }
    return out;
  };
  std::set<std::pair<std::string, std::string>> rels, mirrored;
  auto key = [&](const BraidWord& l, const BraidWord& r) {
    auto kl = detail::word_key(P, l), kr = detail::word_key(P, r);
    return kl < kr ? std::make_pair(kl, kr) : std::make_pair(kr, kl);
  };
  for (const auto& rel : relations(P)) {
    rels.insert(key(rel.left, rel.right));
    mirrored.insert(key(mirror_word(rel.left), mirror_word(rel.right)));
  }
  return rels == mirrored;
}

}  // namespace ncpgar

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "ncpgar/garside.hpp"

namespace ncpgar {

// Word grammar: whitespace-separated tokens `a[p,q]`, `a[p]`, `D`;
// suffix `!` inverts, suffix `^<int>` raises to a power.

struct Token {
  enum class Kind { SymAtom, AsymAtom, Delta };
  Kind kind = Kind::Delta;
  int p = 0, q = 0;
  long long power = 1;
};

using BraidWord = std::vector<Token>;

inline Partition atom_partition(const Params& P, const Token& t) {
  switch (t.kind) {
    case Token::Kind::SymAtom:
      return atom_sym(P, mod(t.p, P.circle()), mod(t.q, P.circle()));
    case Token::Kind::AsymAtom:
      return atom_asym(P, mod(t.p, P.circle()));
    case Token::Kind::Delta:
      return Partition::trivial(P.circle(), true);
  }
  throw Error("unreachable");
}

/// Canonical display name of a height 1 member (or D for the Garside element).
inline std::string atom_name(const Params& P, const Partition& u) {
  if (u.is_trivial()) return "D";
  const int m = P.circle();
  auto center_pts = u.circle_points_of_part(u.part_of(u.center()));
  if (center_pts.size() == 1) return "a[" + std::to_string(center_pts[0]) + "]";
  // symmetric atom: smallest representative pair (r, r+d)
  for (int id = 0; id < u.part_count(); ++id) {
    if (u.part_has_center(id)) continue;
    std::vector<int> pts = u.circle_points_of_part(id);
    if (pts.size() != 2) continue;
    int d = cyc_dist(pts[0], pts[1], m);
    int r = pts[0];
    if (d >= P.n) {
      r = pts[1];
      d = m - d;
    }
    int best = m;
    for (int j = 0; j < P.e; ++j) best = std::min(best, mod(r + j * P.n, m));
    return "a[" + std::to_string(best) + "," + std::to_string(best + d) + "]";
  }
  throw DomainError("not a height 1 member");
}

inline BraidWord parse_word(const Params& P, const std::string& text) {
  BraidWord word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Token t;
    size_t i = 0;
    auto read_int = [&]() {
      bool neg = false;
      if (i < tok.size() && (tok[i] == '-' || tok[i] == '+')) neg = tok[i++] == '-';
      if (i >= tok.size() || !std::isdigit((unsigned char)tok[i]))
        throw ParseError("expected integer in token '" + tok + "'");
      long long v = 0;
      while (i < tok.size() && std::isdigit((unsigned char)tok[i])) v = v * 10 + (tok[i++] - '0');
      return neg ? -v : v;
    };
    if (tok[i] == 'D') {
      t.kind = Token::Kind::Delta;
      ++i;
    } else if (tok[i] == 'a') {
      ++i;
      if (i >= tok.size() || tok[i] != '[') throw ParseError("expected '[' in token '" + tok + "'");
      ++i;
      long long p = read_int();
      if (i < tok.size() && tok[i] == ',') {
        ++i;
        long long q = read_int();
        t.kind = Token::Kind::SymAtom;
        t.p = (int)p;
        t.q = (int)q;
        int d = cyc_dist(mod(t.p, P.circle()), mod(t.q, P.circle()), P.circle());
        d = std::min(d, P.circle() - d);
        if (d <= 0 || d >= P.n)
          throw ParseError("atom indices must satisfy 0 < |p-q| < n in '" + tok + "'");
      } else {
        t.kind = Token::Kind::AsymAtom;
        t.p = (int)p;
      }
      if (i >= tok.size() || tok[i] != ']') throw ParseError("expected ']' in token '" + tok + "'");
      ++i;
    } else {
      throw ParseError("unexpected token '" + tok + "'");
    }
    bool inverted = false;
    bool powered = false;
    while (i < tok.size()) {
      if (tok[i] == '!' && !inverted) {
        inverted = true;
        ++i;
      } else if (tok[i] == '^' && !powered) {
        ++i;
        t.power = read_int();
        powered = true;
      } else {
        throw ParseError("trailing garbage in token '" + tok + "'");
      }
    }
    if (inverted) t.power = -t.power;
    word.push_back(t);
  }
  return word;
}

inline CanonicalForm word_to_cf(const DualBraidMonoid& M, const BraidWord& word) {
  CanonicalForm acc = M.one();
  for (const Token& t : word) {
    CanonicalForm base = t.kind == Token::Kind::Delta
                             ? M.delta_power(1)
                             : M.from_simple(atom_partition(M.params(), t));
    acc = M.mul(acc, M.pow(base, t.power));
  }
  return acc;
}

inline CanonicalForm parse(const DualBraidMonoid& M, const std::string& text) {
  return word_to_cf(M, parse_word(M.params(), text));
}

/// Canonical-form printing: `D^<k> | <partition> | <partition> | ...`.
inline std::string print_cf(const CanonicalForm& a) {
  std::string out = "D^" + std::to_string(a.delta);
  if (a.factors.empty()) return out + " |";
  for (const auto& f : a.factors) out += " | " + print_literal(f);
  return out;
}

}  // namespace ncpgar

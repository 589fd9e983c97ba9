#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "ncpgar/params.hpp"

namespace ncpgar {

using Rational = boost::rational<long long>;

/// Polynomial with exact rational coefficients, ascending powers.
struct Poly {
  std::vector<Rational> c{Rational(0)};

  static Poly constant(Rational v) { return Poly{{v}}; }

  static Poly linear(Rational a0, Rational a1) { return Poly{{a0, a1}}; }

  Poly operator*(const Poly& o) const {
    std::vector<Rational> out(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) out[i + j] += c[i] * o.c[j];
    return Poly{out};
  }

  Rational eval(Rational x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  long long eval_integer(long long x) const {
    Rational v = eval(Rational(x));
    if (v.denominator() != 1) throw DomainError("polynomial value is not an integer");
    return v.numerator();
  }

  std::string str(const std::string& var = "X") const {
    std::string out;
    for (size_t i = c.size(); i-- > 0;) {
      if (c[i] == Rational(0) && c.size() > 1) continue;
      Rational v = c[i];
      if (out.empty()) {
        if (v < Rational(0)) out += "-";
      } else {
        out += v < Rational(0) ? " - " : " + ";
      }
      if (v < Rational(0)) v = -v;
      std::string coef = std::to_string(v.numerator());
      if (v.denominator() != 1) coef += "/" + std::to_string(v.denominator());
      if (i == 0)
        out += coef;
      else {
        out += (v == Rational(1)) ? "" : coef + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }
};

/// Z(1,1,n)(X) = prod_{k=2}^{n} (k + n(X-1)) / k.
inline Poly zeta_convex(int n) {
  Poly z = Poly::constant(Rational(1));
  for (int k = 2; k <= n; ++k)
    z = z * Poly::linear(Rational(k - n, k), Rational(n, k));
  return z;
}

/// Z(e,1,n)(X) = prod_{k=1}^{n} (k + n(X-1)) / k (independent of e >= 2).
inline Poly zeta_flat(int n) {
  Poly z = Poly::constant(Rational(1));
  for (int k = 1; k <= n; ++k)
    z = z * Poly::linear(Rational(k - n, k), Rational(n, k));
  return z;
}

/// Z(e,e,n+1)(X) = (n+1+en(X-1))/(n+1) * prod_{k=1}^{n} (k + n(X-1)) / k.
inline Poly zeta_main(const Params& P) {
  Poly z = Poly::linear(Rational(P.n + 1 - P.e * P.n, P.n + 1), Rational(P.e * P.n, P.n + 1));
  return z * zeta_flat(P.n);
}

/// Degrees of the defining reflection representation: e, 2e, ..., ne, n+1.
inline std::vector<int> reflection_degrees(const Params& P) {
  std::vector<int> out;
  for (int k = 1; k <= P.n; ++k) out.push_back(k * P.e);
  out.push_back(P.n + 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// |NCP(e,e,n+1)| = Z(e,e,n+1)(2), the generalised Catalan number.
inline long long catalan(const Params& P) { return zeta_main(P).eval_integer(2); }

}  // namespace ncpgar

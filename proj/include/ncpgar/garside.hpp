#pragma once

#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "ncpgar/correspondence.hpp"
#include "ncpgar/kreweras.hpp"
#include "ncpgar/lattice.hpp"

namespace ncpgar {

/// Braid group element in Garside normal form: a power of Delta = b_triv
/// followed by a left-weighted sequence of proper simples.
struct CanonicalForm {
  long long delta = 0;
  std::vector<Partition> factors;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

  long long inf() const { return delta; }
  long long len() const { return (long long)factors.size(); }
  long long sup() const { return delta + len(); }
};

/// The dual braid monoid M(e,e,n+1) and its group of fractions.
/// Simples are the members of NCP(e,e,n+1); disc is the unit, triv is Delta.
/// All state is immutable after construction; the member list used by the
/// conjugacy machinery is built lazily behind a once-flag.
class DualBraidMonoid {
 public:
  explicit DualBraidMonoid(const Params& P)
      : p_(P),
        atoms_(P),
        disc_(Partition::discrete(P.circle(), true)),
        triv_(Partition::trivial(P.circle(), true)) {}

  const Params& params() const { return p_; }
  const AtomTable& atom_table() const { return atoms_; }
  const Partition& unit() const { return disc_; }
  const Partition& delta_simple() const { return triv_; }

  /// Conjugation by Delta on simples: tau(s) = Delta^-1 s Delta.
  Partition tau(const Partition& s, long long k = 1) const {
    return s.rotated(mod((int)(k % p_.circle()) * (p_.n + 1), p_.circle()));
  }

  Partition bar(const Partition& s) const { return complement(p_, s, triv_); }

  /// Partial product of simples: defined iff d refines bar(u), and then the
  /// unique simple with group image g_u g_d.
  std::optional<Partition> apply_simple(const Partition& u, const Partition& d) const {
    if (!d.refines(bar(u))) return std::nullopt;
    auto w = u_of(atoms_, ncpgar::mul(g_of(p_, u), g_of(p_, d)));
    if (!w) throw Error("partial product left the simples");  // cannot happen
    return w;
  }

  /// For h <= t, the simple h\t carrying the rest of t.
  Partition left_quotient(const Partition& h, const Partition& t) const {
    return complement(p_, h, t);
  }

  bool left_weighted(const Partition& s, const Partition& t) const {
    return meet(p_, bar(s), t) == disc_;
  }

  // --- canonical forms ------------------------------------------------------

  CanonicalForm one() const { return CanonicalForm{}; }

  CanonicalForm delta_power(long long k) const { return CanonicalForm{k, {}}; }

  CanonicalForm from_simple(const Partition& s) const { return normalize(0, {s}); }

  /// Left-weighted normal form of Delta^delta f_1 ... f_k by local slidings.
  CanonicalForm normalize(long long delta, std::vector<Partition> fs) const {
    std::erase(fs, disc_);
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t i = 0; i < fs.size(); ++i) {
        if (fs[i] == triv_) {  // extract a full Delta to the front
          for (size_t j = 0; j < i; ++j) fs[j] = tau(fs[j]);
          fs.erase(fs.begin() + i);
          ++delta;
          changed = true;
          break;
        }
        if (i + 1 >= fs.size()) continue;
        Partition h = meet(p_, bar(fs[i]), fs[i + 1]);
        if (h == disc_) continue;
        Partition slid = *apply_simple(fs[i], h);
        Partition rest = left_quotient(h, fs[i + 1]);
        fs[i] = slid;
        if (rest == disc_)
          fs.erase(fs.begin() + i + 1);
        else
          fs[i + 1] = rest;
        changed = true;
        break;
      }
    }
    return CanonicalForm{delta, std::move(fs)};
  }

  CanonicalForm mul(const CanonicalForm& a, const CanonicalForm& b) const {
    std::vector<Partition> fs;
    fs.reserve(a.factors.size() + b.factors.size());
    for (const auto& f : a.factors) fs.push_back(tau(f, b.delta));
    for (const auto& f : b.factors) fs.push_back(f);
    return normalize(a.delta + b.delta, std::move(fs));
  }

  CanonicalForm inverse(const CanonicalForm& a) const {
    CanonicalForm out = one();
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it)
      out = mul(out, CanonicalForm{-1, {tau(bar(*it), -1)}});
    return mul(out, delta_power(-a.delta));
  }

  CanonicalForm pow(const CanonicalForm& a, long long k) const {
    CanonicalForm base = k < 0 ? inverse(a) : a;
    CanonicalForm acc = one();
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) acc = mul(acc, base);
    return acc;
  }

  bool eq(const CanonicalForm& a, const CanonicalForm& b) const { return a == b; }

  /// Word length in atoms (Delta contributes n+1); a rewriting invariant.
  long long length_hom(const CanonicalForm& a) const {
    long long len = a.delta * (p_.n + 1);
    for (const auto& f : a.factors) len += height(p_, f);
    return len;
  }

  /// Image in G(e,e,n+1) under the projection sending b_u to g_u.
  GroupElement group_image(const CanonicalForm& a) const {
    GroupElement g = power(coxeter_c(p_), a.delta);
    for (const auto& f : a.factors) g = ncpgar::mul(g, g_of(p_, f));
    return g;
  }

  // --- conjugacy ------------------------------------------------------------

  CanonicalForm cycling(const CanonicalForm& a) const {
    if (a.factors.empty()) return a;
    std::vector<Partition> fs(a.factors.begin() + 1, a.factors.end());
    fs.push_back(tau(a.factors.front(), -a.delta));
    return normalize(a.delta, std::move(fs));
  }

  CanonicalForm decycling(const CanonicalForm& a) const {
    if (a.factors.empty()) return a;
    std::vector<Partition> fs;
    fs.push_back(tau(a.factors.back(), a.delta));
    fs.insert(fs.end(), a.factors.begin(), a.factors.end() - 1);
    return normalize(a.delta, std::move(fs));
  }

  CanonicalForm conjugate(const CanonicalForm& a, const CanonicalForm& by) const {
    return mul(mul(inverse(by), a), by);
  }

  /// A representative with maximal inf and minimal canonical length.
  CanonicalForm summit_representative(CanonicalForm x) const {
    auto better = [](const CanonicalForm& a, const CanonicalForm& b) {
      return a.delta > b.delta || (a.delta == b.delta && a.len() < b.len());
    };
    for (bool improved = true; improved;) {
      improved = false;
      for (auto step : {&DualBraidMonoid::cycling, &DualBraidMonoid::decycling}) {
        for (bool local = true; local;) {
          local = false;
          std::set<CanonicalForm> seen;
          CanonicalForm y = x;
          while (seen.insert(y).second) {
            y = (this->*step)(y);
            if (better(y, x)) {
              x = y;
              local = improved = true;
              break;
            }
          }
        }
      }
    }
    return x;
  }

  /// Super summit set: saturation of a summit representative under
  /// conjugation by simples, restricted to (max inf, min length).
  std::set<CanonicalForm> super_summit_set(const CanonicalForm& a) const {
    CanonicalForm rep = summit_representative(a);
    const auto& simples = members();
    std::set<CanonicalForm> out{rep};
    std::vector<CanonicalForm> todo{rep};
    while (!todo.empty()) {
      CanonicalForm x = todo.back();
      todo.pop_back();
      for (const auto& s : simples) {
        if (s == disc_) continue;
        CanonicalForm y = conjugate(x, from_simple(s));
        if (y.delta != rep.delta || y.len() != rep.len()) continue;
        if (out.insert(y).second) {
          if ((long long)out.size() > size_guard())
            throw SizeGuardError("super summit set exceeds size guard");
          todo.push_back(std::move(y));
        }
      }
    }
    return out;
  }

  bool conjugacy_test(const CanonicalForm& a, const CanonicalForm& b) const {
    if (length_hom(a) != length_hom(b)) return false;
    CanonicalForm ra = summit_representative(a);
    CanonicalForm rb = summit_representative(b);
    if (ra.delta != rb.delta || ra.len() != rb.len()) return false;
    return super_summit_set(a).count(rb) > 0;
  }

  /// All simples (members of the lattice); built once, on first use.
  const std::vector<Partition>& members() const {
    std::call_once(members_once_, [&] { members_ = enumerate_members(p_); });
    return members_;
  }

 private:
  Params p_;
  AtomTable atoms_;
  Partition disc_, triv_;
  mutable std::once_flag members_once_;
  mutable std::vector<Partition> members_;
};

}  // namespace ncpgar

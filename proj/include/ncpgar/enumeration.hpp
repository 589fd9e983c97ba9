#pragma once

#include <functional>
#include <map>
#include <vector>

#include "ncpgar/convex.hpp"
#include "ncpgar/kreweras.hpp"
#include "ncpgar/lattice.hpp"
#include "ncpgar/zeta.hpp"

namespace ncpgar {

/// Uniform handle on the three complemented lattices, for chain counting and
/// derived sequences.
class LatticeModel {
 public:
  enum class Kind { Convex, Flat, Main };

  static LatticeModel convex(int m) { return LatticeModel(Kind::Convex, Params(1, m), m); }
  static LatticeModel flat(const Params& P) { return LatticeModel(Kind::Flat, P, P.circle()); }
  static LatticeModel main(const Params& P) {
    return LatticeModel(Kind::Main, P, P.circle());
  }

  Kind kind() const { return kind_; }
  const Params& params() const { return params_; }

  Partition disc() const {
    return Partition::discrete(m_, kind_ == Kind::Main);
  }
  Partition triv() const {
    return Partition::trivial(m_, kind_ == Kind::Main);
  }

  bool member(const Partition& u) const {
    switch (kind_) {
      case Kind::Convex: return is_polygon_member(u);
      case Kind::Flat: return is_flat_member(params_, u);
      case Kind::Main: return is_member(params_, u);
    }
    return false;
  }

  Partition join(const Partition& u, const Partition& v) const {
    switch (kind_) {
      case Kind::Convex: return polygon_join(u, v);
      case Kind::Flat: return flat_join(params_, u, v);
      case Kind::Main: return ncpgar::join(params_, u, v);
    }
    throw Error("unreachable");
  }

  Partition complement(const Partition& u, const Partition& v) const {
    switch (kind_) {
      case Kind::Convex: return convex_complement(u, v);
      case Kind::Flat: return flat_complement(params_, u, v);
      case Kind::Main: return ncpgar::complement(params_, u, v);
    }
    throw Error("unreachable");
  }

  Partition bar(const Partition& u) const { return complement(u, triv()); }

  std::vector<Partition> elements() const {
    switch (kind_) {
      case Kind::Convex: return enumerate_polygon_members(m_);
      case Kind::Flat: return enumerate_flat_members(params_);
      case Kind::Main: return enumerate_members(params_);
    }
    throw Error("unreachable");
  }

 private:
  LatticeModel(Kind k, const Params& P, int m) : kind_(k), params_(P), m_(m) {}
  Kind kind_;
  Params params_;
  int m_;
};

// --- chain counting ---------------------------------------------------------

/// Number of weakly increasing N-tuples; equals the Zeta polynomial at N+1.
inline long long chain_count(const LatticeModel& L, int N) {
  if (N < 0) throw DomainError("chain length must be non-negative");
  if (N == 0) return 1;
  const auto elems = L.elements();
  const int k = (int)elems.size();
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) leq[i][j] = elems[i].refines(elems[j]);
  std::vector<long long> f(k, 1);
  for (int step = 1; step < N; ++step) {
    std::vector<long long> g(k, 0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (leq[i][j]) g[j] += f[i];
    f = std::move(g);
  }
  long long total = 0;
  for (long long v : f) total += v;
  return total;
}

/// Number of strictly increasing N-tuples, by direct dynamic programming.
inline long long strict_chain_count(const LatticeModel& L, int N) {
  if (N < 0) throw DomainError("chain length must be non-negative");
  if (N == 0) return 1;
  const auto elems = L.elements();
  const int k = (int)elems.size();
  std::vector<std::vector<bool>> lt(k, std::vector<bool>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lt[i][j] = i != j && elems[i].refines(elems[j]);
  std::vector<long long> f(k, 1);
  for (int step = 1; step < N; ++step) {
    std::vector<long long> g(k, 0);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i)
        if (lt[i][j]) g[j] += f[i];
    f = std::move(g);
  }
  long long total = 0;
  for (long long v : f) total += v;
  return total;
}

/// Strict N-tuple count recovered from weak counts by binomial inversion:
/// weak(N) = sum_k strict(k) C(N-1, k-1).
inline long long strict_chain_count_by_inversion(const LatticeModel& L, int N) {
  std::vector<long long> weak(N + 1);
  for (int j = 1; j <= N; ++j) weak[j] = chain_count(L, j);
  std::vector<std::vector<long long>> C(N + 1, std::vector<long long>(N + 1, 0));
  for (int i = 0; i <= N; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j) C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0);
  }
  long long s = 0;
  for (int j = 1; j <= N; ++j) {
    long long term = C[N - 1][j - 1] * weak[j];
    s += ((N - j) % 2 == 0) ? term : -term;
  }
  return s;
}

/// Maximal chains of the main lattice run disc, heights 1..n, triv: strict
/// (n+2)-tuples. Their number equals |Red_T(c)|.
inline long long maximal_chain_count(const LatticeModel& L, int length) {
  return strict_chain_count_by_inversion(L, length);
}

/// All weakly increasing N-tuples, explicitly (small lattices only).
inline std::vector<std::vector<Partition>> weak_chains(const LatticeModel& L, int N) {
  const auto elems = L.elements();
  std::vector<std::vector<Partition>> out;
  std::vector<Partition> cur;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == N) {
      out.push_back(cur);
      return;
    }
    for (const auto& u : elems) {
      if (!cur.empty() && !cur.back().refines(u)) continue;
      cur.push_back(u);
      rec(depth + 1);
      cur.pop_back();
    }
    if ((long long)out.size() > size_guard()) throw SizeGuardError("too many chains");
  };
  rec(0);
  return out;
}

// --- derived sequences ------------------------------------------------------

/// derive: an N-chain maps to (u_1, u_1\u_2, ..., u_{N-1}\u_N, bar(u_N)).
inline std::vector<Partition> derive(const LatticeModel& L, const std::vector<Partition>& chain) {
  std::vector<Partition> out;
  if (chain.empty()) return {L.bar(L.disc())};  // the unique 1-derived sequence: (triv)
  out.push_back(chain.front());
  for (size_t i = 0; i + 1 < chain.size(); ++i)
    out.push_back(L.complement(chain[i], chain[i + 1]));
  out.push_back(L.bar(chain.back()));
  return out;
}

inline bool is_derived_sequence(const LatticeModel& L, const std::vector<Partition>& seq) {
  if (seq.empty()) return false;
  Partition acc = L.disc();
  for (const auto& p : seq) {
    Partition next = L.join(acc, p);
    if (!(L.complement(acc, next) == p)) return false;
    acc = next;
  }
  return acc == L.triv();
}

/// integrate: partial joins (p_0, p_0 v p_1, ..., p_0 v ... v p_{N-1}).
inline std::vector<Partition> integrate(const LatticeModel& L, const std::vector<Partition>& seq) {
  if (!is_derived_sequence(L, seq)) throw DomainError("not a derived sequence");
  std::vector<Partition> chain;
  Partition acc = L.disc();
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    acc = L.join(acc, seq[i]);
    chain.push_back(acc);
  }
  return chain;
}

// --- the (1+nN)-to-1 fibration ----------------------------------------------

struct FibrationReport {
  bool pass = false;
  long long expected_fiber = 0;
  long long fibers = 0;
  long long total = 0;
};

/// E maps (N+1)-derived sequences of NCP(e,1,n) onto those of NCP(1,1,n);
/// every fiber must have exactly 1 + nN elements.
inline FibrationReport e_fibration_count(const Params& P, int N) {
  FibrationReport rep;
  rep.expected_fiber = 1 + (long long)P.n * N;
  LatticeModel flat = LatticeModel::flat(P);
  LatticeModel base = LatticeModel::convex(P.n);
  auto key = [](const std::vector<Partition>& seq) {
    std::string k;
    for (const auto& p : seq) {
      for (int x : p.assignment()) k += (char)('a' + x);
      k += '|';
    }
    return k;
  };
  std::map<std::string, long long> fiber;
  for (const auto& ch : weak_chains(base, N)) fiber[key(derive(base, ch))] = 0;
  for (const auto& ch : weak_chains(flat, N)) {
    std::vector<Partition> d = derive(flat, ch);
    std::vector<Partition> img;
    for (const auto& p : d) img.push_back(e_map(P, p));
    auto it = fiber.find(key(img));
    if (it == fiber.end()) return rep;  // image is not a derived sequence downstairs
    ++it->second;
    ++rep.total;
  }
  rep.fibers = (long long)fiber.size();
  rep.pass = true;
  for (const auto& [k, v] : fiber)
    if (v != rep.expected_fiber) rep.pass = false;
  return rep;
}

}  // namespace ncpgar

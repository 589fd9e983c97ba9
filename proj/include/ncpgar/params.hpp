#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ncpgar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad literal, bad token, index out of range.
struct ParseError : Error {
  using Error::Error;
};

/// Violated precondition: wrong carrier, non-member partition, params mismatch.
struct DomainError : Error {
  using Error::Error;
};

/// A computation would exceed the configured enumeration cap.
struct SizeGuardError : DomainError {
  using DomainError::DomainError;
};

/// Enumeration cap shared by the brute-force paths (group enumeration,
/// lattice enumeration, orbit closures). Override with NCPGAR_SIZE_GUARD.
inline long long size_guard() {
  static const long long cap = [] {
    if (const char* s = std::getenv("NCPGAR_SIZE_GUARD")) {
      char* end = nullptr;
      long long v = std::strtoll(s, &end, 10);
      if (end != s && v > 0) return v;
    }
    return 1000000LL;
  }();
  return cap;
}

/// Parameters of the group G(e,e,n+1). The partition circle has e*n points.
struct Params {
  int e = 0;
  int n = 0;

  Params() = default;
  Params(int e_, int n_) : e(e_), n(n_) {
    if (e < 1 || n < 1) throw DomainError("params require e >= 1 and n >= 1");
  }

  int circle() const { return e * n; }  // points of mu_en
  int rank() const { return n + 1; }    // matrix size

  long long group_order() const {
    long long o = 1;
    for (int k = 1; k <= n; ++k) o *= e;
    for (int k = 2; k <= n + 1; ++k) o *= k;
    return o;
  }

  friend bool operator==(const Params&, const Params&) = default;
};

inline int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ncpgar

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mgc {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Int ipow(long b, unsigned long e) { return ipow(Int(b), e); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }
// Canonical a/b.
inline Rat frac(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

inline std::string to_str(const Int& v) { return v.get_str(); }
inline std::string to_str(const Rat& v) { return v.get_str(); }

// Binomial coefficient for small arguments.
inline Int binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

int moebius(int n);
std::vector<int> divisors(int n);

// Returns (p, r) with q = p^r, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power(int q);

}  // namespace mgc

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qclab/errors.hpp"

namespace qclab {

// Exact coefficient arithmetic. mpq_class keeps values canonical
// (gcd(|num|, den) = 1, den > 0, zero is 0/1), which is exactly the
// invariant the rest of the library relies on for structural equality.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(errc::zero_divisor, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int binom(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Generalized binomial coefficient: a*(a-1)*...*(a-k+1) / k!.
inline Rat binom_rat(const Rat& a, unsigned long k) {
  Rat num(1);
  Int kfac(1);
  for (unsigned long j = 0; j < k; ++j) {
    num *= a - Rat(static_cast<long>(j));
    kfac *= static_cast<long>(j) + 1;
  }
  return num / Rat(kfac);
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (base == 0) fail(errc::eval_at_pole, "0 raised to a negative power");
    return rat_pow(Rat(1) / base, -e);
  }
  Rat acc(1), b(base);
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) acc *= b;
    b *= b;
    u >>= 1;
  }
  return acc;
}

// Least nonnegative residue of an integer modulo m (m fits in 64 bits).
inline std::uint64_t mod_u64(const Int& n, std::uint64_t m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qclab

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qclab/errors.hpp"
#include "qclab/poly.hpp"
#include "qclab/qkit.hpp"

namespace qclab {

// Deterministic primality by trial division; intended for n up to ~10^6.
inline bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Inverse of a modulo m (gcd(a, m) = 1) by the extended Euclidean algorithm.
inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long quot = r / nr;
    t -= quot * nt;
    std::swap(t, nt);
    r -= quot * nr;
    std::swap(r, nr);
  }
  if (r != 1) fail(errc::not_invertible, "no inverse modulo " + std::to_string(m));
  long long res = t % static_cast<long long>(m);
  if (res < 0) res += static_cast<long long>(m);
  return static_cast<std::uint64_t>(res);
}

}  // namespace detail

// Legendre symbol (a/p) via Euler's criterion.
inline int legendre(long long a, long p) {
  if (!is_prime(p) || p == 2) fail(errc::not_prime, "legendre requires an odd prime");
  long long r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  std::uint64_t e = detail::powmod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

// <u/v>_p: least nonnegative residue of the rational u/v modulo p.
inline long frac_residue(long long u, long long v, long p) {
  if (!is_prime(p) || p == 2) fail(errc::not_prime, "frac_residue requires an odd prime");
  long long vr = v % p;
  if (vr < 0) vr += p;
  if (vr == 0) fail(errc::denominator_divisible_by_p, "denominator divisible by p");
  long long ur = u % p;
  if (ur < 0) ur += p;
  std::uint64_t inv = detail::invmod_u64(static_cast<std::uint64_t>(vr), static_cast<std::uint64_t>(p));
  return static_cast<long>(detail::mulmod_u64(static_cast<std::uint64_t>(ur), inv, p));
}

enum class TwoSquareConvention { x_odd, x_one_mod_4 };

// Writes p = x^2 + y^2 for a prime p = 1 (mod 4). Under x_odd, x > 0 is odd;
// under x_one_mod_4 the sign of x is chosen so that x = 1 (mod 4). Both feed
// the congruences only through 4x^2, so the results agree; the convention is
// threaded for auditability.
inline std::pair<long, long> two_square(long p, TwoSquareConvention conv) {
  if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (p % 4 != 1) fail(errc::no_representation, "p = 3 (mod 4) is not a sum of two squares");
  for (long x = 1; x * x <= p; x += 2) {
    long rest = p - x * x;
    long y = 0;
    while (y * y < rest) ++y;
    if (y * y == rest) {
      if (conv == TwoSquareConvention::x_one_mod_4 && x % 4 == 3) return {-x, y};
      return {x, y};
    }
  }
  fail(errc::no_representation, "no two-square decomposition found");
}

// The quotient ring Q[q]/([p]^r) with [p] = 1 + q + ... + q^{p-1}. Immutable;
// cheap to copy and safe to share across threads.
class Modulus {
 public:
  Modulus(long p, int r) {
    if (p == 2) fail(errc::even_prime_unsupported, "p = 2 is rejected; statements assume odd p");
    if (!is_prime(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
    if (r < 1) fail(errc::invalid_params, "ring exponent must be >= 1");
    auto data = std::make_shared<Data>();
    data->p = p;
    data->r = r;
    data->modpoly = lp_pow(qint(p), r);
    data->dense = lp_to_dense_q(data->modpoly);
    d_ = std::move(data);
  }

  long p() const { return d_->p; }
  int r() const { return d_->r; }
  const LPoly& modpoly() const { return d_->modpoly; }
  const std::vector<Rat>& dense() const { return d_->dense; }
  long degree() const { return static_cast<long>(d_->dense.size()) - 1; }

  friend bool operator==(const Modulus& lhs, const Modulus& rhs) {
    return lhs.p() == rhs.p() && lhs.r() == rhs.r();
  }

 private:
  struct Data {
    long p;
    int r;
    LPoly modpoly;
    std::vector<Rat> dense;
  };
  std::shared_ptr<const Data> d_;
};

inline Modulus make_ring(long p, int r) { return Modulus(p, r); }

// Canonical residue: the unique representative of degree < r(p-1) with
// nonnegative exponents. Structural equality of `rep` is congruence.
struct RElem {
  Modulus ring;
  LPoly rep;

  bool is_zero() const { return rep.is_zero(); }
  bool is_one() const { return rep.is_one(); }
  std::string to_string() const { return rep.to_string(); }

  friend bool operator==(const RElem& lhs, const RElem& rhs) {
    return lhs.ring == rhs.ring && lhs.rep == rhs.rep;
  }
};

namespace detail {

inline std::vector<Rat> dense_mod(std::vector<Rat> f, const Modulus& ring) {
  dense_divrem(f, ring.dense());
  return f;
}

inline std::vector<Rat> dense_mulmod(const std::vector<Rat>& f, const std::vector<Rat>& g,
                                     const Modulus& ring) {
  if (f.empty() || g.empty()) return {};
  std::vector<Rat> prod(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[j] != 0) prod[i + j] += f[i] * g[j];
    }
  }
  return dense_mod(std::move(prod), ring);
}

// Extended Euclid over Q[q] against the ring modulus, with monic
// normalization at every step. Returns g with f*g = 1 in the ring, or raises
// NotInvertible when gcd(f, [p]) != 1.
inline std::vector<Rat> dense_invert(std::vector<Rat> f, const Modulus& ring) {
  std::vector<Rat> r0 = ring.dense(), r1 = dense_mod(std::move(f), ring);
  std::vector<Rat> t0, t1{Rat(1)};
  if (r1.empty()) fail(errc::not_invertible, "zero residue has no inverse");
  while (true) {
    // normalize r1 monic, scaling t1 the same way
    Rat lead = r1.back();
    if (lead != 1) {
      for (auto& coeff : r1) coeff /= lead;
      for (auto& coeff : t1) coeff /= lead;
    }
    if (r1.size() == 1) break;  // unit: r1 == 1
    std::vector<Rat> rem = r0;
    std::vector<Rat> quot = dense_divrem(rem, r1);
    // t2 = t0 - quot*t1
    std::vector<Rat> t2 = t0;
    if (!quot.empty() && !t1.empty()) {
      t2.resize(std::max(t2.size(), quot.size() + t1.size() - 1));
      for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i] == 0) continue;
        for (std::size_t j = 0; j < t1.size(); ++j) {
          if (t1[j] != 0) t2[i + j] -= quot[i] * t1[j];
        }
      }
      dense_trim(t2);
    }
    if (rem.empty()) {
      fail(errc::not_invertible, "polynomial shares a factor with the ring modulus");
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return dense_mod(std::move(t1), ring);
}

}  // namespace detail

// Reduces a polynomial in q to its canonical representative. Laurent inputs
// are folded first: q is a unit, so q^{-1} is realized by the inverse of q.
inline RElem reduce(const LPoly& f, const Modulus& ring) {
  if (!f.univariate_in(Var::q)) fail(errc::not_univariate, "reduce expects a polynomial in q");
  long shift = f.min_exp(Var::q);
  if (shift >= 0) {
    std::vector<Rat> dense = lp_to_dense_q(f);
    return RElem{ring, lp_from_dense_q(detail::dense_mod(std::move(dense), ring))};
  }
  // fold: f = (f * q^{|shift|}) * (q^{-1})^{|shift|}
  std::vector<LPoly::Term> shifted;
  shifted.reserve(f.size());
  for (auto [m, coeff] : f.terms()) {
    m.e[static_cast<int>(Var::q)] -= static_cast<std::int32_t>(shift);
    shifted.emplace_back(m, coeff);
  }
  std::vector<Rat> dense = lp_to_dense_q(LPoly::from_terms(std::move(shifted)));
  dense = detail::dense_mod(std::move(dense), ring);
  std::vector<Rat> invq = detail::dense_invert(std::vector<Rat>{Rat(0), Rat(1)}, ring);
  std::vector<Rat> scale{Rat(1)};
  long e = -shift;
  std::vector<Rat> sq = invq;
  while (e) {
    if (e & 1) scale = detail::dense_mulmod(scale, sq, ring);
    e >>= 1;
    if (e) sq = detail::dense_mulmod(sq, sq, ring);
  }
  return RElem{ring, lp_from_dense_q(detail::dense_mulmod(dense, scale, ring))};
}

// Inverse of f in the ring (requires gcd(f, [p]) = 1).
inline RElem invert(const LPoly& f, const Modulus& ring) {
  if (!f.univariate_in(Var::q)) fail(errc::not_univariate, "invert expects a polynomial in q");
  RElem folded = reduce(f, ring);
  return RElem{ring, lp_from_dense_q(detail::dense_invert(lp_to_dense_q(folded.rep), ring))};
}

// reduce(num) * invert(den).
inline RElem reduce_ratio(const LPoly& num, const LPoly& den, const Modulus& ring) {
  RElem n = reduce(num, ring);
  RElem dinv = invert(den, ring);
  return RElem{ring, lp_from_dense_q(detail::dense_mulmod(lp_to_dense_q(n.rep),
                                                          lp_to_dense_q(dinv.rep), ring))};
}

// Canonical representative of q^f for any integer f.
inline RElem qpow_mod(const Modulus& ring, long long f) {
  std::vector<Rat> base;
  if (f >= 0) {
    base = std::vector<Rat>{Rat(0), Rat(1)};
  } else {
    base = detail::dense_invert(std::vector<Rat>{Rat(0), Rat(1)}, ring);
    f = -f;
  }
  std::vector<Rat> acc{Rat(1)};
  unsigned long long e = static_cast<unsigned long long>(f);
  while (e) {
    if (e & 1) acc = detail::dense_mulmod(acc, base, ring);
    e >>= 1;
    if (e) base = detail::dense_mulmod(base, base, ring);
  }
  return RElem{ring, lp_from_dense_q(acc)};
}

inline RElem radd(const RElem& lhs, const RElem& rhs) {
  return RElem{lhs.ring, lhs.rep + rhs.rep};  // degrees already < deg(modpoly)
}
inline RElem rsub(const RElem& lhs, const RElem& rhs) { return RElem{lhs.ring, lhs.rep - rhs.rep}; }
inline RElem rmul(const RElem& lhs, const RElem& rhs) {
  return RElem{lhs.ring, lp_from_dense_q(detail::dense_mulmod(lp_to_dense_q(lhs.rep),
                                                              lp_to_dense_q(rhs.rep), lhs.ring))};
}

// Reduces a factored rational function: fold the numerator, then multiply by
// the inverse of each denominator factor. NotInvertible propagates when a
// factor shares a zero with [p].
inline RElem reduce_frf(const FRFunc& f, const Modulus& ring) {
  std::vector<Rat> acc = lp_to_dense_q(reduce(f.num, ring).rep);
  for (const auto& factor : f.den) {
    // Inversion runs even when acc is already zero: a denominator sharing a
    // factor with [p] must surface as NotInvertible, not be masked.
    std::vector<Rat> inv = lp_to_dense_q(invert(factor, ring).rep);
    if (!acc.empty()) acc = detail::dense_mulmod(acc, inv, ring);
  }
  return RElem{ring, lp_from_dense_q(acc)};
}

}  // namespace qclab

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qclab/errors.hpp"
#include "qclab/poly.hpp"

namespace qclab {

// Base q^d of a q-shifted factorial or q-binomial coefficient.
struct QBase {
  int step = 1;
  QBase() = default;
  explicit QBase(int d) : step(d) {
    if (d < 1) fail(errc::invalid_params, "QBase step must be positive");
  }
};

// [n] = 1 + q + ... + q^{n-1}.
inline LPoly qint(long n) {
  if (n < 1) fail(errc::invalid_params, "qint requires n >= 1");
  std::vector<LPoly::Term> terms;
  terms.reserve(n);
  for (long i = 0; i < n; ++i) {
    Monomial m;
    m.e[static_cast<int>(Var::q)] = static_cast<std::int32_t>(i);
    terms.emplace_back(m, Rat(1));
  }
  return LPoly::from_terms(std::move(terms));
}

// The factors (1 - a*q^{d*j}), j = 0..n-1, of (a; q^d)_n. Factors equal to 1
// (an argument of zero) are dropped.
inline std::vector<LPoly> qpoch_factors(const LPoly& arg, QBase base, long n) {
  if (n < 0) fail(errc::invalid_params, "q-shifted factorial requires n >= 0");
  std::vector<LPoly> fs;
  fs.reserve(n);
  for (long j = 0; j < n; ++j) {
    LPoly f = LPoly(1) - arg * qvar_pow(base.step * j);
    if (!f.is_one()) fs.push_back(std::move(f));
  }
  return fs;
}

// (a; q^d)_n = (1-a)(1-a q^d)...(1-a q^{d(n-1)}); the empty product is 1.
inline LPoly qpoch(const LPoly& arg, QBase base, long n) {
  LPoly acc(1);
  for (const auto& f : qpoch_factors(arg, base, n)) acc *= f;
  return acc;
}

// (q^d; q^d)_n.
inline LPoly qfac(long n, QBase base) { return qpoch(qvar_pow(base.step), base, n); }

// Gaussian binomial coefficient in base q^d:
// (q^{d(n-k+1)}; q^d)_k / (q^d; q^d)_k for 0 <= k <= n, otherwise 0.
// The quotient is always a polynomial; a nonzero remainder would indicate an
// implementation bug and raises InternalNonExactDivision.
inline LPoly qbinom(long n, long k, QBase base) {
  if (k < 0 || k > n) return LPoly(0);
  if (k == 0 || k == n) return LPoly(1);
  long d = base.step;
  std::vector<Rat> dense{Rat(1)};
  auto mul_binfactor = [&dense](long e) {
    // dense *= (1 - q^e)
    std::vector<Rat> out(dense.size() + e);
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] == 0) continue;
      out[i] += dense[i];
      out[i + e] -= dense[i];
    }
    dense = std::move(out);
  };
  for (long j = n - k + 1; j <= n; ++j) mul_binfactor(d * j);
  for (long j = 1; j <= k; ++j) {
    std::vector<Rat> den(d * j + 1);
    den[0] = 1;
    den[d * j] = -1;
    std::vector<Rat> quot = dense_divrem(dense, den);
    if (!dense.empty()) {
      fail(errc::internal_non_exact_division, "q-binomial division left a remainder");
    }
    dense = std::move(quot);
  }
  return lp_from_dense_q(dense);
}

// --- factored rational terms -------------------------------------------------

// scalar * prod(num) / prod(den), with each den factor nonzero. Keeping
// denominators as factor lists lets sums share a common denominator and lets
// equality checks cancel matching factors before any large expansion.
struct FTerm {
  Rat scalar = Rat(1);
  std::vector<LPoly> num;
  std::vector<LPoly> den;

  FTerm& operator*=(LPoly f) {
    num.push_back(std::move(f));
    return *this;
  }
  FTerm& mul_den(LPoly f) {
    if (f.is_zero()) fail(errc::vanishing_denominator, "zero factor in a denominator");
    if (!f.is_one()) den.push_back(std::move(f));
    return *this;
  }
  FTerm& mul_num_factors(std::vector<LPoly> fs) {
    for (auto& f : fs) num.push_back(std::move(f));
    return *this;
  }
  FTerm& mul_den_factors(std::vector<LPoly> fs) {
    for (auto& f : fs) mul_den(std::move(f));
    return *this;
  }
};

struct FRFunc {
  LPoly num;
  std::vector<LPoly> den;  // factor list; empty product = 1

  LPoly den_product() const {
    LPoly acc(1);
    for (const auto& f : den) acc *= f;
    return acc;
  }
  RFunc to_rfunc() const { return RFunc(num, den_product()); }
};

namespace detail {

// Multiset of factors keyed by the canonical rendering (canonical form makes
// the string a faithful key).
inline std::map<std::string, std::pair<LPoly, int>> factor_multiset(const std::vector<LPoly>& fs) {
  std::map<std::string, std::pair<LPoly, int>> m;
  for (const auto& f : fs) {
    auto [it, inserted] = m.try_emplace(f.to_string(), f, 0);
    it->second.second += 1;
  }
  return m;
}

}  // namespace detail

// Sums factored terms over the least common denominator formed from the
// denominator factor multisets (no polynomial gcd involved).
inline FRFunc fsum(const std::vector<FTerm>& terms) {
  std::map<std::string, std::pair<LPoly, int>> common;
  std::vector<std::map<std::string, std::pair<LPoly, int>>> per_term;
  per_term.reserve(terms.size());
  for (const auto& t : terms) {
    per_term.push_back(detail::factor_multiset(t.den));
    for (const auto& [key, fc] : per_term.back()) {
      auto [it, inserted] = common.try_emplace(key, fc.first, 0);
      it->second.second = std::max(it->second.second, fc.second);
    }
  }
  LPoly num(0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].scalar == 0) continue;
    LPoly part(terms[i].scalar);
    bool zero = false;
    for (const auto& f : terms[i].num) {
      if (f.is_zero()) {
        zero = true;
        break;
      }
      part *= f;
    }
    if (zero) continue;
    for (const auto& [key, fc] : common) {
      int mine = 0;
      auto it = per_term[i].find(key);
      if (it != per_term[i].end()) mine = it->second.second;
      for (int j = mine; j < fc.second; ++j) part *= fc.first;
    }
    num += part;
  }
  FRFunc out;
  out.num = std::move(num);
  for (const auto& [key, fc] : common) {
    for (int j = 0; j < fc.second; ++j) out.den.push_back(fc.first);
  }
  return out;
}

inline FRFunc fterm_value(const FTerm& t) { return fsum({t}); }

// Product of factored rational functions.
inline FRFunc frf_mul(const FRFunc& l, const FRFunc& r) {
  FRFunc out;
  out.num = l.num * r.num;
  out.den = l.den;
  out.den.insert(out.den.end(), r.den.begin(), r.den.end());
  return out;
}

// Equality of factored rational functions by cross-multiplication, cancelling
// denominator factors shared by both sides first.
inline bool frf_equal(const FRFunc& lhs, const FRFunc& rhs) {
  auto ml = detail::factor_multiset(lhs.den);
  auto mr = detail::factor_multiset(rhs.den);
  LPoly l = lhs.num, r = rhs.num;
  for (const auto& [key, fc] : mr) {
    int in_l = 0;
    auto it = ml.find(key);
    if (it != ml.end()) in_l = it->second.second;
    for (int j = in_l; j < fc.second; ++j) l *= fc.first;
  }
  for (const auto& [key, fc] : ml) {
    int in_r = 0;
    auto it = mr.find(key);
    if (it != mr.end()) in_r = it->second.second;
    for (int j = in_r; j < fc.second; ++j) r *= fc.first;
  }
  return (l - r).is_zero();
}

// Truncated basic hypergeometric series: the first `terms` summands of
//   sum_n (a_1,...,a_u; q^d)_n z^n / ((q^d, b_1,...,b_v; q^d)_n).
// A zero parameter contributes the constant factor 1. A lower parameter whose
// factor vanishes inside the truncation range raises VanishingDenominator.
inline RFunc phi_sum(const std::vector<LPoly>& upper, const std::vector<LPoly>& lower, QBase base,
                     const LPoly& z, long terms) {
  if (terms < 0) fail(errc::invalid_params, "phi_sum requires a nonnegative term count");
  std::vector<FTerm> parts;
  parts.reserve(terms);
  for (long n = 0; n < terms; ++n) {
    FTerm t;
    for (const auto& a : upper) t.mul_num_factors(qpoch_factors(a, base, n));
    t *= lp_pow(z, n);
    for (long j = 1; j <= n; ++j) t.mul_den(LPoly(1) - qvar_pow(base.step * j));
    for (const auto& b : lower) {
      for (auto& f : qpoch_factors(b, base, n)) {
        if (f.is_zero()) {
          fail(errc::vanishing_denominator, "lower parameter vanishes within the truncation range");
        }
        t.mul_den(std::move(f));
      }
    }
    parts.push_back(std::move(t));
  }
  return fsum(parts).to_rfunc();
}

}  // namespace qclab

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qclab/registry.hpp"

// Check registry, congruence family: each entry builds the two sides of a
// congruence in Q[q]/([p]^r) as factored rational functions together with the
// ring exponent r the display asserts. q-powers with negative exponents stay
// Laurent here; the residue ring folds them.

namespace qclab {
namespace reg {

struct CongruencePair {
  FRFunc lhs;
  FRFunc rhs;
  int ring_exp = 1;
};

// [ (p-1)/2 + k, 2k ]_{q^2} = (-1)^k [2k, k]_{q^2} q^{kp - k^2} / (-q;q)_{2k}^2
// in Q[q]/([p]^2), for 0 <= k <= (p-1)/2.
inline CongruencePair qc_lemma31(long long p, long long k) {
  FRFunc lhs = as_frf(bin((p - 1) / 2 + k, 2 * k, 2));
  FTerm rhs;
  rhs.scalar = sign_pm(k);
  rhs *= bin(2 * k, k, 2);
  rhs *= Q(k * p - k * k);
  rhs.mul_den_factors(poch(-Q(1), 1, 2 * k));
  rhs.mul_den_factors(poch(-Q(1), 1, 2 * k));
  return {lhs, fterm_value(rhs), 2};
}

// Truncated central sum in base q^m with numerator (q^m;q^{2m})_k (q^r;q^m)_k:
// modulo [p] it evaluates to a closed product when A := <-r/m>_p = s (mod 2)
// and vanishes otherwise. The closed form follows from the terminating 4phi3
// evaluation in its a -> 0 limit; the q-exponent that route yields is
// m((A+s)/2 + s(A-s)), verified here on the full p <= 11, m <= 6 grid.
inline CongruencePair qc_lemma51(long long p, long long m, long long r, long long s) {
  std::vector<FTerm> terms;
  for (long long k = s; k <= (p - 1) / 2; ++k) {
    FTerm t;
    t.mul_num_factors(poch(Q(m), 2 * m, k));
    t.mul_num_factors(poch(Q(r), m, k));
    t *= Q(m * k);
    t.mul_den_factors(facs(k - s, m));
    t.mul_den_factors(facs(k + s, m));
    terms.push_back(std::move(t));
  }
  long long res = frac_residue(-r, m, static_cast<long>(p));
  if ((res - s) % 2 != 0) return {fsum(terms), as_frf(LPoly(0)), 1};
  FTerm rhs;
  rhs *= Q(m * ((res + s) / 2 + s * (res - s)));
  rhs.mul_num_factors(poch(Q(m), 2 * m, (res - s) / 2));
  rhs.mul_num_factors(poch(Q(-m * res), m, s));
  rhs.mul_den_factors(facs((res + s) / 2, 2 * m));
  return {fsum(terms), fterm_value(rhs), 1};
}

// (q^r;q^m)_k / (q^m;q^m)_k = (-1)^k [A, k]_{q^m} q^{m C(k,2) - m k A} (mod [p]),
// A = <-r/m>_p.
inline CongruencePair qc_eq65(long long p, long long m, long long r, long long k) {
  FTerm lhs;
  lhs.mul_num_factors(poch(Q(r), m, k));
  lhs.mul_den_factors(facs(k, m));
  long long res = frac_residue(-r, m, static_cast<long>(p));
  FTerm rhs;
  rhs.scalar = sign_pm(k);
  rhs *= bin(res, k, m);
  rhs *= Q(m * choose2(k) - m * k * res);
  return {fterm_value(lhs), fterm_value(rhs), 1};
}

// (q^{m-r};q^m)_t / (q^m;q^m)_t = [A + t, t]_{q^m} (mod [p]), t = k + s.
inline CongruencePair qc_eq66(long long p, long long m, long long r, long long t) {
  FTerm lhs;
  lhs.mul_num_factors(poch(Q(m - r), m, t));
  lhs.mul_den_factors(facs(t, m));
  long long res = frac_residue(-r, m, static_cast<long>(p));
  return {fterm_value(lhs), as_frf(bin(res + t, t, m)), 1};
}

// Central q^2-binomial sum with weight q^{2k} / ((-q^2;q^2)_k^2 (-q;q)_{2k}^2):
// closed q^4-binomial form when s = (p-1)/2 (mod 2), zero otherwise; mod [p]^2.
inline CongruencePair qc_thm21(long long p, long long s) {
  long long n = (p - 1) / 2;
  std::vector<FTerm> terms;
  for (long long k = 0; k <= n; ++k) {
    FTerm t;
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k + s, 2);
    t *= Q(2 * k);
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    terms.push_back(std::move(t));
  }
  if ((n - s) % 2 != 0) return {fsum(terms), as_frf(LPoly(0)), 2};
  FTerm rhs;
  rhs.scalar = sign_pm(s);
  rhs *= Q(n - s * s);
  rhs *= bin(n, (p - 2 * s - 1) / 4, 4);
  rhs *= bin(n, (p - 2 * s - 1) / 4, 4);
  rhs.mul_num_factors(facs((p - 2 * s - 1) / 2, 2));
  rhs.mul_num_factors(facs((p + 2 * s - 1) / 2, 2));
  rhs.mul_den_factors(facs(n, 4));
  rhs.mul_den_factors(facs(n, 4));
  return {fsum(terms), fterm_value(rhs), 2};
}

// The s = 0 specialization of the sum above, with the closed form written
// through 1 / (-q^2;q^2)_{(p-1)/2}^2; nonzero branch iff p = 1 (mod 4).
inline CongruencePair qc_cor22(long long p) {
  long long n = (p - 1) / 2;
  std::vector<FTerm> terms;
  for (long long k = 0; k <= n; ++k) {
    FTerm t;
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k, 2);
    t *= Q(2 * k);
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    terms.push_back(std::move(t));
  }
  if (p % 4 != 1) return {fsum(terms), as_frf(LPoly(0)), 2};
  FTerm rhs;
  rhs *= Q(n);
  rhs *= bin(n, (p - 1) / 4, 4);
  rhs *= bin(n, (p - 1) / 4, 4);
  rhs.mul_den_factors(poch(-Q(2), 2, n));
  rhs.mul_den_factors(poch(-Q(2), 2, n));
  return {fsum(terms), fterm_value(rhs), 2};
}

// Same central sum with the modified weight q^{k - 2k^2}: vanishes mod [p]
// for p = 3 (mod 4) by the antisymmetry of the k-th and ((p-1)/2 - k)-th terms.
inline CongruencePair qc_remark_cor22(long long p) {
  long long n = (p - 1) / 2;
  std::vector<FTerm> terms;
  for (long long k = 0; k <= n; ++k) {
    FTerm t;
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k, 2);
    t *= bin(2 * k, k, 2);
    t *= Q(k - 2 * k * k);
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(2), 2, k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    t.mul_den_factors(poch(-Q(1), 1, 2 * k));
    terms.push_back(std::move(t));
  }
  return {fsum(terms), as_frf(LPoly(0)), 1};
}

// Shared left-hand side of the base-q^m family: the summand is written with
// the polynomial q-binomial [2k, k+s]_{q^m}, so the only true denominator is
// (q^{2m};q^{2m})_k^2 (a unit mod [p] for k <= p-1).
inline FRFunc qm_family_lhs(long long m, long long r, long long s, long long kmax) {
  std::vector<FTerm> terms;
  for (long long k = s; k <= kmax; ++k) {
    FTerm t;
    t *= bin(2 * k, k + s, m);
    t.mul_num_factors(poch(Q(r), m, k));
    t.mul_num_factors(poch(Q(m - r), m, k));
    t *= Q(m * k);
    t.mul_den_factors(facs(k, 2 * m));
    t.mul_den_factors(facs(k, 2 * m));
    terms.push_back(std::move(t));
  }
  return fsum(terms);
}

inline CongruencePair qc_thm23_25(long long p, long long m, long long r, long long s) {
  return {qm_family_lhs(m, r, s, (p - 1) / 2), as_frf(LPoly(0)), 2};
}

inline CongruencePair qc_thm23_26(long long p, long long m, long long r, long long s) {
  return {qm_family_lhs(m, r, s, p - 1), as_frf(LPoly(0)), 2};
}

// Closed-form branch (A = s (mod 2), A = <-r/m>_p). The closed form is the
// product of the two half-sum evaluations of the lemma5.1 shape for r and
// m - r, carried through the Clausen-type factorization. The prefactor works
// out to (-1)^{n+s} q^{m(n(n+1) + s(s+1) + 2s(n-s))} with n = (p-1)/2; the
// subscripts are (A -+ s)/2 and ((p-1-A) -+ s)/2. Confirmed numerically on
// the full admissible grid for p <= 13 (see the registry tests).
inline CongruencePair qc_thm23_27(long long p, long long m, long long r, long long s) {
  long long n = (p - 1) / 2;
  long long res = frac_residue(-r, m, static_cast<long>(p));
  long long res2 = p - 1 - res;
  FTerm rhs;
  rhs.scalar = sign_pm(n + s);
  rhs *= Q(m * (n * (n + 1) + s * (s + 1) + 2 * s * (n - s)));
  rhs.mul_num_factors(poch(Q(m), 2 * m, (res - s) / 2));
  rhs.mul_num_factors(poch(Q(m), 2 * m, (res2 - s) / 2));
  rhs.mul_num_factors(poch(Q(-m * res), m, s));
  rhs.mul_num_factors(poch(Q(-m * res2), m, s));
  rhs.mul_den_factors(facs((res + s) / 2, 2 * m));
  rhs.mul_den_factors(facs((res2 + s) / 2, 2 * m));
  return {qm_family_lhs(m, r, s, (p - 1) / 2), fterm_value(rhs), 1};
}

inline CongruencePair qc_cor24(long long p, long long m, long long s) {
  return {qm_family_lhs(m, 1, s, (p - 1) / 2), as_frf(LPoly(0)), 2};
}

// sum_{k=0}^{(p-1)/2} (q;q^2)_k (q;q^2)_{k+s} / ((q^2;q^2)_k (q^2;q^2)_{k+s})
//   = (-1/p) q^{(1-p^2)/4}  (mod [p]^2).
inline CongruencePair qc_thm26(long long p, long long s) {
  std::vector<FTerm> terms;
  for (long long k = 0; k <= (p - 1) / 2; ++k) {
    FTerm t;
    t.mul_num_factors(poch(Q(1), 2, k));
    t.mul_num_factors(poch(Q(1), 2, k + s));
    t.mul_den_factors(facs(k, 2));
    t.mul_den_factors(facs(k + s, 2));
    terms.push_back(std::move(t));
  }
  FTerm rhs;
  rhs.scalar = Rat(legendre(-1, static_cast<long>(p)));
  rhs *= Q((1 - p * p) / 4);
  return {fsum(terms), fterm_value(rhs), 2};
}

// Shared left-hand side of the two-Pochhammer family
// sum_{k=0}^{p-s-1} (q^r;q^m)_k (q^{m-r};q^m)_{k+s} / ((q^m;q^m)_k (q^m;q^m)_{k+s}).
// Also the defining sum of the f_{p,m,r} table (r may exceed m or be negative;
// the r-dependent factors are then Laurent).
inline FRFunc two_poch_lhs(long long p, long long m, long long r, long long s) {
  std::vector<FTerm> terms;
  for (long long k = 0; k <= p - s - 1; ++k) {
    FTerm t;
    t.mul_num_factors(poch(Q(r), m, k));
    t.mul_num_factors(poch(Q(m - r), m, k + s));
    t.mul_den_factors(facs(k, m));
    t.mul_den_factors(facs(k + s, m));
    terms.push_back(std::move(t));
  }
  return fsum(terms);
}

inline CongruencePair qc_thm27_211(long long p, long long m, long long r, long long s) {
  long long res = frac_residue(-r, m, static_cast<long>(p));
  FTerm rhs;
  rhs.scalar = sign_pm(res);
  rhs *= Q(-m * res * (res + 1) / 2);
  return {two_poch_lhs(p, m, r, s), fterm_value(rhs), 1};
}

// Variant for p = +-1 (mod m), where the exponent collapses to
// r(m-r)(1-p^2)/(2m).
inline CongruencePair qc_thm27_212(long long p, long long m, long long r, long long s, int ring_exp) {
  long long res = frac_residue(-r, m, static_cast<long>(p));
  long long num = r * (m - r) * (1 - p * p);
  if (num % (2 * m) != 0) fail(errc::precondition_violated, "exponent is not an integer");
  FTerm rhs;
  rhs.scalar = sign_pm(res);
  rhs *= Q(num / (2 * m));
  return {two_poch_lhs(p, m, r, s), fterm_value(rhs), ring_exp};
}

// m in {3,4,6} specialization with a Legendre-symbol sign. The q-exponent is
// r(m-r)(1-p^2)/(2m) -- for m = 3 that is (1-p^2)/3; the (1-p^2)/4 variant is
// ruled out numerically (see the registry tests).
inline CongruencePair qc_cor28(long long p, long long m, long long r, long long s, int ring_exp) {
  int sym = 0;
  if (m == 3) {
    sym = legendre(-3, static_cast<long>(p));
  } else if (m == 4) {
    sym = legendre(-2, static_cast<long>(p));
  } else if (m == 6) {
    sym = legendre(-1, static_cast<long>(p));
  } else {
    fail(errc::invalid_params, "m must be 3, 4 or 6");
  }
  long long num = r * (m - r) * (1 - p * p);
  FTerm rhs;
  rhs.scalar = Rat(sym);
  rhs *= Q(num / (2 * m));
  return {two_poch_lhs(p, m, r, s), fterm_value(rhs), ring_exp};
}

inline CongruencePair qc_conj73(long long p, long long m, long long r, long long s) {
  return {qm_family_lhs(m, r, s, p - 1), as_frf(LPoly(0)), 2};
}

inline CongruencePair qc_conj74(long long p, long long m, long long s) {
  return {qm_family_lhs(m, 1, s, p - 1), as_frf(LPoly(0)), 2};
}

inline CongruencePair build_qcongruence(const std::string& id, long long p, const Params& params) {
  if (id == "lemma3.1") return qc_lemma31(p, param(params, "k"));
  if (id == "lemma5.1") return qc_lemma51(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "eq6.5") return qc_eq65(p, param(params, "m"), param(params, "r"), param(params, "k"));
  if (id == "eq6.6") {
    return qc_eq66(p, param(params, "m"), param(params, "r"),
                   param(params, "k") + param_or(params, "s", 0));
  }
  if (id == "thm2.1") return qc_thm21(p, param(params, "s"));
  if (id == "cor2.2") return qc_cor22(p);
  if (id == "remark-cor2.2") return qc_remark_cor22(p);
  if (id == "thm2.3-2.5") return qc_thm23_25(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "thm2.3-2.6") return qc_thm23_26(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "thm2.3-2.7") return qc_thm23_27(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "cor2.4") return qc_cor24(p, param(params, "m"), param(params, "s"));
  if (id == "thm2.6") return qc_thm26(p, param(params, "s"));
  if (id == "thm2.7-2.11") return qc_thm27_211(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "thm2.7-2.12") return qc_thm27_212(p, param(params, "m"), param(params, "r"), param(params, "s"), 1);
  if (id == "cor2.8") return qc_cor28(p, param(params, "m"), param(params, "r"), param(params, "s"), 1);
  if (id == "conj7.3") return qc_conj73(p, param(params, "m"), param(params, "r"), param(params, "s"));
  if (id == "conj7.4") return qc_conj74(p, param(params, "m"), param(params, "s"));
  if (id == "conj7.5") return qc_cor28(p, param(params, "m"), param(params, "r"), param(params, "s"), 2);
  if (id == "conj7.6") return qc_thm27_212(p, param(params, "m"), param(params, "r"), param(params, "s"), 2);
  fail(errc::unknown_check_id, "unknown q-congruence check id: " + id);
}

}  // namespace reg

// The registry surface used by tests and reports: the exact left/right sides
// of a display as rational functions (identity entries need no prime; the
// congruence entries take p from the params).
inline RFunc build_lhs(const SumSpec& spec) {
  try {
    return reg::build_identity(spec.check_id, spec.params).lhs.to_rfunc();
  } catch (const error& e) {
    if (e.code() != errc::unknown_check_id) throw;
  }
  return reg::build_qcongruence(spec.check_id, param(spec.params, "p"), spec.params).lhs.to_rfunc();
}

inline RFunc build_rhs(const SumSpec& spec) {
  try {
    return reg::build_identity(spec.check_id, spec.params).rhs.to_rfunc();
  } catch (const error& e) {
    if (e.code() != errc::unknown_check_id) throw;
  }
  return reg::build_qcongruence(spec.check_id, param(spec.params, "p"), spec.params).rhs.to_rfunc();
}

}  // namespace qclab

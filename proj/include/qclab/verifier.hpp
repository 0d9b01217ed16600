#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclab/congruence.hpp"
#include "qclab/registry.hpp"
#include "qclab/residue.hpp"
#include "qclab/result.hpp"

// Runs registry entries and reports CheckResults. Hypothesis violations are
// reported as skipped-precondition rows, never silently dropped; a
// NotInvertible denominator during a congruence check is a hard failure
// (the statements assert all denominators are units).

namespace qclab {

namespace detail {

inline const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {
      "lemma4.1a", "lemma4.1b", "eq4.3",     "lemma4.2a", "lemma4.2b",
      "lemma4.3",  "lemma4.4",  "qbinom-thm", "eq4.14",    "qchu-4.19",
      "qchu-4.21", "qdixon",    "andrews-watson", "lemma3.2", "thm2.5",
      "conj7.2",   "lemma6.1a", "lemma6.1b", "eq6.3",     "eq6.4"};
  return ids;
}

inline const std::vector<std::string>& qcong_ids() {
  static const std::vector<std::string> ids = {
      "lemma3.1", "lemma5.1",    "eq6.5",       "eq6.6",       "thm2.1",
      "cor2.2",   "remark-cor2.2", "thm2.3-2.5", "thm2.3-2.6", "thm2.3-2.7",
      "cor2.4",   "thm2.6",      "thm2.7-2.11", "thm2.7-2.12", "cor2.8",
      "conj7.3",  "conj7.4",     "conj7.5",     "conj7.6"};
  return ids;
}

inline const std::vector<std::string>& int_ids() {
  static const std::vector<std::string> ids = {
      "int1.1", "int1.2", "int1.3", "int1.4",  "int1.5",  "int1.6",  "int1.7",
      "int1.8", "int1.9", "int1.10", "int1.11", "int1.12", "int2.1",  "int2.4"};
  return ids;
}

// Conjecture scans are evidence, not verification: their failures are
// flagged but do not fail a run. conj7.2 is exercised as an exact identity
// and is not in this set.
inline bool is_conjecture_scan(const std::string& id) {
  return id == "conj7.3" || id == "conj7.4" || id == "conj7.5" || id == "conj7.6";
}

inline bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

template <typename F>
CheckResult timed_check(const std::string& id, Params params, F&& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult res;
  try {
    res = body();
  } catch (const error& e) {
    if (e.code() == errc::unknown_check_id || e.code() == errc::no_classical_counterpart) throw;
    if (e.code() == errc::precondition_violated || e.code() == errc::invalid_params ||
        e.code() == errc::no_representation || e.code() == errc::denominator_divisible_by_p) {
      res = CheckResult::skipped(id, params, e.what());
    } else {
      res = CheckResult::failed(id, params, e.what());
    }
  }
  res.id = id;
  res.params = std::move(params);
  res.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace detail

// --- hypothesis validation ---------------------------------------------------

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(errc::precondition_violated, what);
}

inline void require_odd_prime(long long p) {
  require(p > 2 && is_prime(static_cast<long>(p)), "p must be an odd prime");
}

// Validates the side conditions of a congruence check id; returns normally
// when the tuple satisfies the statement's hypotheses.
inline void validate_qcong(const std::string& id, long long p, const Params& params) {
  require_odd_prime(p);
  auto A = [&](long long r, long long m) { return frac_residue(-r, m, static_cast<long>(p)); };
  if (id == "lemma3.1") {
    long long k = param(params, "k");
    require(k >= 0 && k <= (p - 1) / 2, "0 <= k <= (p-1)/2");
  } else if (id == "lemma5.1" || id == "thm2.3-2.5" || id == "thm2.3-2.6" || id == "thm2.3-2.7") {
    long long m = param(params, "m"), r = param(params, "r"), s = param(params, "s");
    require(m >= 1 && r >= 1, "m, r positive");
    require(m % p != 0, "p must not divide m");
    long long a = A(r, m), a2 = A(m - r, m);
    require(s >= 0 && s <= std::min(a, a2), "s <= min(<-r/m>_p, <-(m-r)/m>_p)");
    if (id == "thm2.3-2.5" || id == "thm2.3-2.6") require((a - s) % 2 != 0, "<-r/m>_p = s+1 (mod 2)");
    if (id == "thm2.3-2.7") require((a - s) % 2 == 0, "<-r/m>_p = s (mod 2)");
  } else if (id == "eq6.5") {
    long long m = param(params, "m"), k = param(params, "k");
    require(m >= 1 && param(params, "r") >= 1, "m, r positive");
    require(m % p != 0, "p must not divide m");
    require(k >= 0 && k <= p - 1, "0 <= k <= p-1");
  } else if (id == "eq6.6") {
    long long m = param(params, "m"), t = param(params, "k") + param_or(params, "s", 0);
    require(m >= 1 && param(params, "r") >= 1, "m, r positive");
    require(m % p != 0, "p must not divide m");
    require(t >= 0 && t <= p - 1, "0 <= k+s <= p-1");
  } else if (id == "thm2.1") {
    long long s = param(params, "s");
    require(s >= 0 && s <= (p - 1) / 2, "0 <= s <= (p-1)/2");
  } else if (id == "cor2.2") {
    // odd prime only
  } else if (id == "remark-cor2.2") {
    require(p % 4 == 3, "p = 3 (mod 4)");
  } else if (id == "cor2.4") {
    long long m = param(params, "m"), s = param(params, "s");
    require(p >= 5, "p >= 5");
    require(m == 3 || m == 4 || m == 6, "m in {3,4,6}");
    require(s >= 0 && s <= (p - 1) / m, "s <= (p-1)/m");
    int sym = legendre(m == 3 ? -3 : m == 4 ? -2 : -1, static_cast<long>(p));
    require((s - (1 + sym) / 2) % 2 == 0, "s parity against the Legendre symbol");
  } else if (id == "thm2.6") {
    long long s = param(params, "s");
    require(s >= 0 && s <= (p - 1) / 2, "0 <= s <= (p-1)/2");
  } else if (id == "thm2.7-2.11" || id == "thm2.7-2.12" || id == "conj7.6") {
    long long m = param(params, "m"), r = param(params, "r"), s = param(params, "s");
    require(m >= 1 && r >= 1 && r < m, "0 < r < m");
    require(m % p != 0, "p must not divide m");
    require(s >= 0 && s <= A(m - r, m), "0 <= s <= <-(m-r)/m>_p");
    if (id != "thm2.7-2.11") require((p + 1) % m == 0 || (p - 1) % m == 0, "p = +-1 (mod m)");
  } else if (id == "cor2.8" || id == "conj7.5") {
    long long m = param(params, "m"), r = param(params, "r"), s = param(params, "s");
    require(p > 3, "p > 3");
    require(m == 3 || m == 4 || m == 6, "m in {3,4,6}");
    require(r == 1 || r == m - 1, "r in {1, m-1}");
    require(s >= 0 && s <= A(m - r, m), "0 <= s <= <(r-m)/m>_p");
  } else if (id == "conj7.3") {
    long long m = param(params, "m"), r = param(params, "r"), s = param(params, "s");
    require(m >= 1 && r >= 1, "m, r positive");
    require(m % p != 0, "p must not divide m");
    require(s >= 0 && s <= p - 1, "0 <= s <= p-1");
    require((A(r, m) - s) % 2 != 0, "<-r/m>_p = s+1 (mod 2)");
  } else if (id == "conj7.4") {
    long long m = param(params, "m"), s = param(params, "s");
    require(p >= 5, "p >= 5");
    require(m == 3 || m == 4 || m == 6, "m in {3,4,6}");
    require(s >= 0 && s <= p - 1, "0 <= s <= p-1");
    int sym = legendre(m == 3 ? -3 : m == 4 ? -2 : -1, static_cast<long>(p));
    require((s - (1 + sym) / 2) % 2 == 0, "s parity against the Legendre symbol");
  } else if (!detail::contains(detail::qcong_ids(), id)) {
    fail(errc::unknown_check_id, "unknown q-congruence check id: " + id);
  }
}

inline void validate_identity(const std::string& id, const Params& params) {
  if (id == "lemma4.1a" || id == "qbinom-thm") {
    require(param(params, "n") >= 0, "n >= 0");
  } else if (id == "lemma4.1b" || id == "eq4.3") {
    require(param(params, "m") >= 0, "m >= 0");
  } else if (id == "lemma4.2a" || id == "lemma4.2b") {
    require(param(params, "n") >= 1, "n >= 1");
  } else if (id == "lemma4.3" || id == "lemma4.4") {
    long long n = param(params, "n"), h = param(params, "h"), m = param(params, "m"),
              s = param(params, "s");
    require(n >= 1 && h >= 1, "n, h positive");
    require(m >= 0 && s >= 0, "m, s nonnegative");
    require(h <= n - m, "h <= n - m");
    require(s <= m, "s <= m");
  } else if (id == "eq4.14") {
    long long n = param(params, "n"), i = param(params, "i");
    require(n >= 0 && i >= 0 && i <= n, "0 <= i <= n");
  } else if (id == "qchu-4.19") {
    long long n = param(params, "n"), m = param(params, "m"), s = param(params, "s");
    require(0 <= s && s <= m && m <= n, "s <= m <= n");
  } else if (id == "qchu-4.21") {
    long long n = param(params, "n"), m = param(params, "m");
    require(0 <= m && m <= n, "0 <= m <= n");
  } else if (id == "qdixon") {
    require(param(params, "a") >= 0 && param(params, "b") >= 0 && param(params, "c") >= 0,
            "a, b, c >= 0");
  } else if (id == "andrews-watson") {
    require(param(params, "n") >= 0, "n >= 0");
  } else if (id == "lemma3.2" || id == "thm2.5" || id == "lemma6.1b" || id == "eq6.4") {
    long long n = param(params, "n"), s = param(params, "s");
    require(n >= 0 && s >= 0 && s <= n, "0 <= s <= n");
  } else if (id == "conj7.2") {
    long long n = param(params, "n"), r = param(params, "r");
    require(n >= 0 && r >= 0 && r <= n, "0 <= r <= n");
  } else if (id == "lemma6.1a" || id == "eq6.3") {
    require(param(params, "n") >= 0 && param(params, "m") >= 0, "n, m >= 0");
  } else if (!detail::contains(detail::identity_ids(), id)) {
    fail(errc::unknown_check_id, "unknown identity check id: " + id);
  }
}

}  // namespace detail

// --- check runners -----------------------------------------------------------

// Decides a polynomial/rational-function identity by exact multivariate
// expansion (never by sampling).
inline CheckResult run_identity_check(const std::string& id, const Params& params) {
  return detail::timed_check(id, params, [&]() {
    detail::validate_identity(id, params);
    reg::IdentityPair pair = reg::build_identity(id, params);
    if (frf_equal(pair.lhs, pair.rhs)) return CheckResult::passed(id, params);
    LPoly diff = pair.lhs.num * pair.rhs.den_product() - pair.rhs.num * pair.lhs.den_product();
    return CheckResult::failed(id, params, "difference: " + clip_witness(diff.to_string()));
  });
}

// Decides a congruence in Q[q]/([p]^r) by reducing LHS - RHS to its canonical
// residue; pass iff the residue is identically zero.
inline CheckResult run_q_congruence_check(const std::string& id, long long p, Params params) {
  params["p"] = p;
  return detail::timed_check(id, params, [&]() {
    detail::validate_qcong(id, p, params);
    reg::CongruencePair pair = reg::build_qcongruence(id, p, params);
    Modulus ring = make_ring(static_cast<long>(p), pair.ring_exp);
    RElem residue = rsub(reduce_frf(pair.lhs, ring), reduce_frf(pair.rhs, ring));
    if (residue.is_zero()) return CheckResult::passed(id, params);
    return CheckResult::failed(id, params, "residue: " + clip_witness(residue.to_string()));
  });
}

// --- integer congruences -----------------------------------------------------

namespace detail {

// Exact rational sum evaluated modulo p^e: clears the denominator with its
// modular inverse. A denominator sharing a factor with p is a hard failure.
inline std::uint64_t rat_mod(const Rat& value, std::uint64_t pe) {
  Int den = value.get_den();
  if (mpz_gcd_ui(nullptr, den.get_mpz_t(), pe) != 1) {
    fail(errc::denominator_not_invertible, "denominator not invertible modulo p^2");
  }
  std::uint64_t d = mod_u64(den, pe);
  std::uint64_t n = mod_u64(value.get_num(), pe);
  return mulmod_u64(n, invmod_u64(d, pe), pe);
}

struct IntCheck {
  Rat sum;               // exact value of the truncated sum
  long long target;      // asserted residue (may be negative; reduced mod p^e)
  std::uint64_t modulus; // p or p^2
};

inline IntCheck build_int_check(const std::string& id, long long p, const Params& params) {
  require_odd_prime(p);
  std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
  auto c2k = [](long long k) { return Rat(binom(2 * k, k)); };

  if (id == "int1.1" || id == "int1.2" || id == "int1.3") {
    if (id == "int1.1") require(p >= 5, "p >= 5 (the alternating form fails at p = 3)");
    Rat sum(0);
    for (long long k = 0; k <= (p - 1) / 2; ++k) {
      if (id == "int1.1") {
        Rat term = Rat(binom((p - 1) / 2, k)) * c2k(k) * c2k(k) / rat_pow(Rat(16), k);
        sum += (k % 2 == 0) ? term : -term;
      } else {
        sum += c2k(k) * c2k(k) * c2k(k) / rat_pow(Rat(64), k);
      }
    }
    long long target = 0;
    if (p % 4 == 1) {
      auto [x, y] = two_square(static_cast<long>(p), TwoSquareConvention::x_odd);
      target = (id == "int1.2") ? 4 * x * x : 4 * x * x - 2 * p;
    }
    return {sum, target, id == "int1.2" ? static_cast<std::uint64_t>(p) : p2};
  }
  if (id == "int1.4" || id == "int1.5" || id == "int1.6") {
    require(p > 3, "p > 3");
    if (id == "int1.4") require(p % 3 == 2, "p = 2 (mod 3)");
    if (id == "int1.5") require(p % 8 == 5 || p % 8 == 7, "p = 5,7 (mod 8)");
    if (id == "int1.6") require(p % 4 == 3, "p = 3 (mod 4)");
    Rat sum(0);
    for (long long k = 0; k <= p - 1; ++k) {
      if (id == "int1.4") sum += Rat(binom(3 * k, k)) * c2k(k) * c2k(k) / rat_pow(Rat(108), k);
      if (id == "int1.5") sum += Rat(binom(4 * k, 2 * k)) * c2k(k) * c2k(k) / rat_pow(Rat(256), k);
      if (id == "int1.6") {
        sum += Rat(binom(6 * k, 3 * k)) * Rat(binom(3 * k, k)) * c2k(k) / rat_pow(Rat(1728), k);
      }
    }
    return {sum, 0, p2};
  }
  if (id == "int1.7") {
    long long u = param(params, "u"), v = param(params, "v");  // a = -u/v
    require(v >= 1 && p % v != 0, "p must not divide the denominator of a");
    require(frac_residue(-u, v, static_cast<long>(p)) % 2 == 1, "<a>_p odd");
    Rat a = make_rat(-u, v);
    Rat sum(0);
    for (long long k = 0; k <= p - 1; ++k) {
      sum += c2k(k) * binom_rat(a, k) * binom_rat(Rat(-1) - a, k) / rat_pow(Rat(4), k);
    }
    return {sum, 0, p2};
  }
  if (id == "int1.8" || id == "int1.9" || id == "int1.10" || id == "int1.11") {
    require(p >= 5, "p >= 5");
    Rat sum(0);
    int sym = 0;
    for (long long k = 0; k <= p - 1; ++k) {
      if (id == "int1.8") sum += c2k(k) * c2k(k) / rat_pow(Rat(16), k);
      if (id == "int1.9") sum += Rat(binom(3 * k, 2 * k)) * c2k(k) / rat_pow(Rat(27), k);
      if (id == "int1.10") sum += Rat(binom(4 * k, 2 * k)) * c2k(k) / rat_pow(Rat(64), k);
      if (id == "int1.11") sum += Rat(binom(6 * k, 3 * k)) * Rat(binom(3 * k, k)) / rat_pow(Rat(432), k);
    }
    if (id == "int1.8") sym = legendre(-1, static_cast<long>(p));
    if (id == "int1.9") sym = legendre(-3, static_cast<long>(p));
    if (id == "int1.10") sym = legendre(-2, static_cast<long>(p));
    if (id == "int1.11") sym = legendre(-1, static_cast<long>(p));
    return {sum, sym, p2};
  }
  if (id == "int1.12") {
    long long s = param(params, "s");
    require(s >= 0 && s <= (p - 1) / 2, "0 <= s <= (p-1)/2");
    Rat sum(0);
    for (long long k = 0; k <= (p - 1) / 2; ++k) {
      sum += c2k(k) * Rat(binom(2 * k + 2 * s, k + s)) / rat_pow(Rat(4), 2 * k + s);
    }
    return {sum, legendre(-1, static_cast<long>(p)), p2};
  }
  if (id == "int2.1") {
    long long s = param(params, "s");
    require(s >= 0 && s <= (p - 1) / 2, "0 <= s <= (p-1)/2");
    require((s - (p + 1) / 2) % 2 == 0, "s = (p+1)/2 (mod 2)");
    Rat sum(0);
    for (long long k = 0; k <= (p - 1) / 2; ++k) {
      sum += c2k(k) * c2k(k) * Rat(binom(2 * k, k + s)) / rat_pow(Rat(64), k);
    }
    return {sum, 0, p2};
  }
  if (id == "int2.4") {
    require(p % 4 == 1, "p = 1 (mod 4)");
    auto [x, y] = two_square(static_cast<long>(p), TwoSquareConvention::x_one_mod_4);
    Rat lhs = Rat(binom((p - 1) / 2, (p - 1) / 4)) * Rat(binom((p - 1) / 2, (p - 1) / 4)) /
              rat_pow(Rat(2), p - 1);
    return {lhs, 4 * x * x - 2 * p, p2};
  }
  fail(errc::unknown_check_id, "unknown integer check id: " + id);
}

}  // namespace detail

// Integer congruence: evaluates the finite sum exactly over Q, clears the
// denominator modulo p (or p^2), and compares with the stated residue.
inline CheckResult run_int_congruence_check(const std::string& id, long long p, Params params) {
  params["p"] = p;
  return detail::timed_check(id, params, [&]() {
    detail::IntCheck chk = detail::build_int_check(id, p, params);
    std::uint64_t got = detail::rat_mod(chk.sum, chk.modulus);
    long long t = chk.target % static_cast<long long>(chk.modulus);
    if (t < 0) t += static_cast<long long>(chk.modulus);
    if (got == static_cast<std::uint64_t>(t)) return CheckResult::passed(id, params);
    return CheckResult::failed(id, params,
                               "residue " + std::to_string(got) + " != expected " + std::to_string(t) +
                                   " (mod " + std::to_string(chk.modulus) + ")");
  });
}

// --- q -> 1 consistency --------------------------------------------------------

namespace detail {

// Exact limit of a univariate rational function at q = 1, clearing matched
// powers of (q - 1) from numerator and denominator.
inline Rat rf_limit_q1(LPoly num, LPoly den) {
  if (!num.univariate_in(Var::q) || !den.univariate_in(Var::q)) {
    fail(errc::not_univariate, "limit requires univariate arguments");
  }
  auto shift_nonneg = [](LPoly& f, long by) {
    std::vector<LPoly::Term> terms;
    for (auto [m, coeff] : f.terms()) {
      m.e[static_cast<int>(Var::q)] += static_cast<std::int32_t>(by);
      terms.emplace_back(m, coeff);
    }
    f = LPoly::from_terms(std::move(terms));
  };
  long shift = std::min(num.min_exp(Var::q), den.min_exp(Var::q));
  if (shift < 0) {
    shift_nonneg(num, -shift);
    shift_nonneg(den, -shift);
  }
  std::vector<Rat> dn = lp_to_dense_q(num), dd = lp_to_dense_q(den);
  std::vector<Rat> qm1{Rat(-1), Rat(1)};  // q - 1
  auto value_at_1 = [](const std::vector<Rat>& f) {
    Rat v(0);
    for (const auto& coeff : f) v += coeff;
    return v;
  };
  auto strip = [&](std::vector<Rat>& f) {
    int count = 0;
    while (!f.empty() && value_at_1(f) == 0) {
      std::vector<Rat> copy = f;
      f = dense_divrem(copy, qm1);
      ++count;
    }
    return count;
  };
  std::vector<Rat> n2 = dn, d2 = dd;
  int vn = strip(n2), vd = strip(d2);
  if (d2.empty()) fail(errc::zero_divisor, "limit of x/0");
  if (vd > vn) fail(errc::eval_at_pole, "pole at q = 1");
  if (vn > vd) return Rat(0);
  return value_at_1(n2) / value_at_1(d2);
}

// The classical summand matching a q-display's summand at q = 1, computed by
// an independent brute-force product formula.
inline Rat classical_summand(const std::string& id, long long k, long long s, long long m) {
  auto c = [](long long n, long long r) { return Rat(binom(n, r)); };
  if (id == "cor2.2") {
    return c(2 * k, k) * c(2 * k, k) * c(2 * k, k) / rat_pow(Rat(64), k);
  }
  if (id == "thm2.1") {
    return c(2 * k, k) * c(2 * k, k) * c(2 * k, k + s) / rat_pow(Rat(64), k);
  }
  if (id == "thm2.6") {
    return c(2 * k, k) * c(2 * k + 2 * s, k + s) / rat_pow(Rat(4), 2 * k + s);
  }
  if (id == "cor2.4") {
    // product form of (q^r;q^m)_k (q^{m-r};q^m)_k / (q^{2m};q^{2m})_k^2 at q=1
    Rat acc(1);
    for (long long j = 0; j < k; ++j) {
      acc *= Rat(static_cast<long>(m * j + 1)) * Rat(static_cast<long>(m * j + m - 1)) /
             (Rat(static_cast<long>(2 * m * (j + 1))) * Rat(static_cast<long>(2 * m * (j + 1))));
    }
    return c(2 * k, k + s) * acc;
  }
  fail(errc::no_classical_counterpart, "no classical counterpart for " + id);
}

}  // namespace detail

// Compares every summand of a q-congruence display, evaluated exactly at
// q = 1, with the corresponding classical binomial summand.
inline CheckResult q_to_one_consistency(const std::string& id, long long p, Params params) {
  params["p"] = p;
  return detail::timed_check(id, params, [&]() {
    detail::require_odd_prime(p);
    long long s = param_or(params, "s", 0);
    long long m = param_or(params, "m", 3);
    if (id != "cor2.2" && id != "thm2.1" && id != "thm2.6" && id != "cor2.4") {
      fail(errc::no_classical_counterpart, "no classical counterpart for " + id);
    }
    for (long long k = (id == "cor2.4" ? s : 0); k <= (p - 1) / 2; ++k) {
      FTerm t;
      using namespace reg;
      if (id == "cor2.2" || id == "thm2.1") {
        t *= bin(2 * k, k, 2);
        t *= bin(2 * k, k, 2);
        t *= bin(2 * k, k + (id == "cor2.2" ? 0 : s), 2);
        t *= Q(2 * k);
        t.mul_den_factors(poch(-Q(2), 2, k));
        t.mul_den_factors(poch(-Q(2), 2, k));
        t.mul_den_factors(poch(-Q(1), 1, 2 * k));
        t.mul_den_factors(poch(-Q(1), 1, 2 * k));
      } else if (id == "thm2.6") {
        t.mul_num_factors(poch(Q(1), 2, k));
        t.mul_num_factors(poch(Q(1), 2, k + s));
        t.mul_den_factors(facs(k, 2));
        t.mul_den_factors(facs(k + s, 2));
      } else {  // cor2.4 family summand in base q^m
        t *= bin(2 * k, k + s, m);
        t.mul_num_factors(poch(Q(1), m, k));
        t.mul_num_factors(poch(Q(m - 1), m, k));
        t *= Q(m * k);
        t.mul_den_factors(facs(k, 2 * m));
        t.mul_den_factors(facs(k, 2 * m));
      }
      FRFunc f = fterm_value(t);
      Rat got = detail::rf_limit_q1(f.num, f.den_product());
      Rat want = detail::classical_summand(id, k, s, m);
      if (got != want) {
        return CheckResult::failed(id, params,
                                   "summand k=" + std::to_string(k) + ": " + rat_str(got) +
                                       " != " + rat_str(want));
      }
    }
    return CheckResult::passed(id, params);
  });
}

}  // namespace qclab

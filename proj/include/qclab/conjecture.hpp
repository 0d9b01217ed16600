#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qclab/congruence.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/verifier.hpp"

// Exact solver for the unique exponent f with
//   sum_{k=0}^{p-s-1} (q^r;q^m)_k (q^{m-r};q^m)_{k+s} / ((q^m;q^m)_k (q^m;q^m)_{k+s})
//     = (-1)^{<-r/m>_p} q^f   (mod [p]^2),
// reproduction of the reference value table, and the conjectured symmetry
// and recurrence of those exponents.

namespace qclab {

struct FEntry {
  long long p = 0;
  long long m = 0;
  long long r = 0;
  long long f = 0;       // meaningful iff found
  int sign = 1;          // (-1)^{<-r/m>_p}
  bool found = false;
  bool s1_checked = false;  // defining congruence re-verified at s = 1
  std::string note;

  friend bool operator<(const FEntry& a, const FEntry& b) {
    return std::tie(a.p, a.m, a.r) < std::tie(b.p, b.m, b.r);
  }
};

namespace detail {

inline void validate_f_params(long long p, long long m, long long r) {
  if (!(p > 2 && is_prime(static_cast<long>(p)))) fail(errc::invalid_params, "p must be an odd prime");
  if (m < 1) fail(errc::invalid_params, "m must be positive");
  if (r == 0) fail(errc::invalid_params, "|r| must be positive");
  if (m % p == 0) fail(errc::invalid_params, "p must not divide m");
  long long rm = ((r % m) + m) % m;
  if (rm == 0) fail(errc::invalid_params, "m must not divide r");
}

inline int f_sign(long long p, long long m, long long r) {
  return frac_residue(-r, m, static_cast<long>(p)) % 2 == 0 ? 1 : -1;
}

// The defining sum at shift s, reduced in Q[q]/([p]^e).
inline RElem f_sum_mod(long long p, long long m, long long r, long long s, int e) {
  return reduce_frf(reg::two_poch_lhs(p, m, r, s), make_ring(static_cast<long>(p), e));
}

inline bool f_congruence_holds(long long p, long long m, long long r, long long s, long long f) {
  Modulus ring = make_ring(static_cast<long>(p), 2);
  RElem lhs = f_sum_mod(p, m, r, s, 2);
  RElem rhs = qpow_mod(ring, f);
  rhs.rep = LPoly(f_sign(p, m, r)) * rhs.rep;
  return lhs.rep == rhs.rep;
}

}  // namespace detail

// Two-stage exact solve. Stage one works modulo [p], where q^p = 1, so the
// residue must literally equal sign * q^{f0} for some f0 in [0, p). Stage two
// writes q^{kp} = 1 + k (q-1)[p] (mod [p]^2) -- exact because
// q^p - 1 = (q-1)[p] and ((q-1)[p])^2 vanishes -- and solves the linear
// equation T - 1 = k (q-1)[p] for rational k, accepting only integral k.
inline std::optional<long long> solve_f(long long p, long long m, long long r) {
  detail::validate_f_params(p, m, r);
  int sign = detail::f_sign(p, m, r);

  Modulus ring1 = make_ring(static_cast<long>(p), 1);
  RElem s1 = detail::f_sum_mod(p, m, r, 0, 1);
  std::optional<long long> f0;
  RElem probe = reduce(LPoly(sign), ring1);
  for (long long cand = 0; cand < p; ++cand) {
    if (s1.rep == probe.rep) {
      f0 = cand;
      break;
    }
    probe = rmul(probe, qpow_mod(ring1, 1));
  }
  if (!f0) return std::nullopt;

  Modulus ring2 = make_ring(static_cast<long>(p), 2);
  RElem t = rmul(detail::f_sum_mod(p, m, r, 0, 2), qpow_mod(ring2, -*f0));
  t.rep = LPoly(sign) * t.rep;
  LPoly u = t.rep - LPoly(1);
  LPoly v = reduce((LPoly::variable(Var::q) - LPoly(1)) * qint(static_cast<long>(p)), ring2).rep;
  Rat k(0);
  if (!u.is_zero()) {
    // k = u/v componentwise; reject unless u is exactly k*v with integral k
    const auto& vterm = v.terms().front();
    Rat cu = u.coeff(vterm.first);
    if (cu == 0) return std::nullopt;
    k = cu / vterm.second;
    if ((u - LPoly(k) * v) != LPoly(0)) return std::nullopt;
    if (!is_integer(k)) return std::nullopt;
  }
  return *f0 + k.get_num().get_si() * p;
}

// Independent oracle: a linear scan of f in [-bound, bound] testing the
// defining congruence directly against the reduced sum.
inline std::optional<long long> brute_f(long long p, long long m, long long r, long long bound) {
  detail::validate_f_params(p, m, r);
  int sign = detail::f_sign(p, m, r);
  Modulus ring = make_ring(static_cast<long>(p), 2);
  RElem target = detail::f_sum_mod(p, m, r, 0, 2);
  target.rep = LPoly(sign) * target.rep;  // sign * S == q^f
  RElem power = qpow_mod(ring, -bound);
  RElem q1 = qpow_mod(ring, 1);
  for (long long f = -bound; f <= bound; ++f) {
    if (power.rep == target.rep) return f;
    power = rmul(power, q1);
  }
  return std::nullopt;
}

// Every f in [-bound, bound] satisfying the defining congruence (uniqueness
// scans).
inline std::vector<long long> brute_f_all(long long p, long long m, long long r, long long bound) {
  detail::validate_f_params(p, m, r);
  int sign = detail::f_sign(p, m, r);
  Modulus ring = make_ring(static_cast<long>(p), 2);
  RElem target = detail::f_sum_mod(p, m, r, 0, 2);
  target.rep = LPoly(sign) * target.rep;
  std::vector<long long> hits;
  RElem power = qpow_mod(ring, -bound);
  RElem q1 = qpow_mod(ring, 1);
  for (long long f = -bound; f <= bound; ++f) {
    if (power.rep == target.rep) hits.push_back(f);
    power = rmul(power, q1);
  }
  return hits;
}

inline long long brute_f_default_bound(long long p, long long m, long long r) {
  return p * p + p * (m + (r < 0 ? -r : r));
}

// Builds the exponent table for the given primes and (m, r-list) pairs.
// Inadmissible tuples (p | m or m | r) are carried as flagged rows; each
// solved row is cross-checked against the defining congruence at s = 1
// whenever 1 <= <-(m-r)/m>_p.
inline std::vector<FEntry> f_table(const std::vector<long long>& primes,
                                   const std::vector<std::pair<long long, std::vector<long long>>>& pairs) {
  std::vector<FEntry> rows;
  for (long long p : primes) {
    for (const auto& [m, rs] : pairs) {
      for (long long r : rs) {
        FEntry e;
        e.p = p;
        e.m = m;
        e.r = r;
        if (m % p == 0 || (r % m + m) % m == 0) {
          e.note = "inadmissible (p | m or m | r); skipped";
          rows.push_back(e);
          continue;
        }
        e.sign = detail::f_sign(p, m, r);
        auto f = solve_f(p, m, r);
        if (!f) {
          e.note = "no exponent found (defining congruence unsatisfied)";
          rows.push_back(e);
          continue;
        }
        e.f = *f;
        e.found = true;
        long long a2 = frac_residue(-(m - r), m, static_cast<long>(p));
        if (a2 >= 1) {
          e.s1_checked = true;
          if (!detail::f_congruence_holds(p, m, r, 1, e.f)) {
            e.found = false;
            e.note = "s = 1 cross-check failed";
          }
        }
        rows.push_back(e);
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

// f_{p,m,r} = f_{p,m,m-r} on every pair present in the table.
inline CheckResult check_f_symmetry(const std::vector<FEntry>& entries) {
  auto find = [&](long long p, long long m, long long r) -> const FEntry* {
    for (const auto& e : entries) {
      if (e.p == p && e.m == m && e.r == r && e.found) return &e;
    }
    return nullptr;
  };
  int pairs = 0;
  for (const auto& e : entries) {
    if (!e.found) continue;
    const FEntry* mirror = find(e.p, e.m, e.m - e.r);
    if (!mirror || mirror == &e) continue;
    ++pairs;
    if (mirror->f != e.f) {
      return CheckResult::failed("f-symmetry", {{"p", e.p}, {"m", e.m}, {"r", e.r}},
                                 "f=" + std::to_string(e.f) + " vs mirror f=" + std::to_string(mirror->f));
    }
  }
  if (pairs == 0) return CheckResult::skipped("f-symmetry", {}, "no (r, m-r) pairs in the table");
  return CheckResult::passed("f-symmetry", {{"pairs", pairs}});
}

// f_{p,m,m+r} = -f_{p,m,r} when p | r, and f_{p,m,r} - r otherwise.
inline CheckResult check_f_recurrence(const std::vector<FEntry>& entries) {
  auto find = [&](long long p, long long m, long long r) -> const FEntry* {
    for (const auto& e : entries) {
      if (e.p == p && e.m == m && e.r == r && e.found) return &e;
    }
    return nullptr;
  };
  int pairs = 0;
  for (const auto& e : entries) {
    if (!e.found) continue;
    const FEntry* next = find(e.p, e.m, e.m + e.r);
    if (!next) continue;
    ++pairs;
    long long expect = (e.r % e.p == 0) ? -e.f : e.f - e.r;
    if (next->f != expect) {
      return CheckResult::failed("f-recurrence", {{"p", e.p}, {"m", e.m}, {"r", e.r}},
                                 "f_{m+r}=" + std::to_string(next->f) + " expected " + std::to_string(expect));
    }
  }
  if (pairs == 0) return CheckResult::skipped("f-recurrence", {}, "no (r, m+r) pairs in the table");
  return CheckResult::passed("f-recurrence", {{"pairs", pairs}});
}

// Reference exponent table. Rows whose printed source value fails the
// internal consistency battery (mod-p forced value, symmetry, recurrence) are
// carried with flagged = true and the recurrence-consistent value in
// `consistent`; solve_f decides, and mismatches are reported with both
// values rather than hidden.
struct FReference {
  long long p, m, r, f;
  bool flagged;          // source value inconsistent with its own structure
  long long consistent;  // recurrence-derived value when flagged
};

inline const std::vector<FReference>& reference_f_table() {
  static const std::vector<FReference> table = {
      {3, 2, 1, -2, false, 0},   {3, 2, 3, -3, false, 0},   {3, 2, 5, 3, false, 0},
      {3, 2, 7, -2, false, 0},   {3, 2, 9, -9, false, 0},   {3, 2, 11, 9, false, 0},
      {3, 2, 13, -2, false, 0},  {5, 3, 1, -8, false, 0},   {5, 3, 2, -8, false, 0},
      {5, 3, 4, -9, false, 0},   {5, 3, 5, -10, false, 0},  {5, 3, 7, -13, false, 0},
      {5, 3, 8, 10, false, 0},   {5, 3, 10, -20, false, 0}, {5, 3, 11, 2, false, 0},
      {5, 3, 13, 20, false, 0},  {5, 3, 14, -9, false, 0},  {5, 3, 16, 7, false, 0},
      {5, 3, 17, -23, false, 0}, {5, 3, 19, -9, false, 0},  {5, 8, 1, -23, false, 0},
      {7, 9, 1, -54, false, 0},  {7, 9, 2, -21, false, 0},  {7, 9, 4, -37, false, 0},
      {7, 9, 5, -37, false, 0},  {7, 9, 7, -21, false, 0},  {7, 9, 8, -54, false, 0},
      {7, 9, 10, -55, false, 0}, {7, 9, 11, -23, false, 0}, {7, 9, 13, -41, false, 0},
      {7, 9, 14, -42, false, 0}, {7, 9, 16, -22, true, 21}, {7, 9, 17, -33, true, -62},
  };
  return table;
}

inline std::vector<std::pair<long long, std::vector<long long>>> reference_pairs_for(long long p) {
  std::vector<std::pair<long long, std::vector<long long>>> pairs;
  for (const auto& row : reference_f_table()) {
    if (row.p != p) continue;
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& pm) { return pm.first == row.m; });
    if (it == pairs.end()) {
      pairs.push_back({row.m, {row.r}});
    } else {
      it->second.push_back(row.r);
    }
  }
  return pairs;
}

// Runs the registry checks backing one of the concluding conjectures over
// its enumeration grid; rows are evidence (tagged conjecture-scan by the
// runner), not proof.
inline std::vector<CheckResult> scan_conjecture(const std::string& id, const Params& bounds) {
  std::vector<CheckResult> results;
  if (id == "conj7.2") {
    for (const auto& c : enumerate_cases(id, bounds)) {
      results.push_back(run_identity_check(id, c.params));
    }
    return results;
  }
  if (id == "conj7.3" || id == "conj7.4" || id == "conj7.5" || id == "conj7.6") {
    long long p = param(bounds, "p");
    for (const auto& c : enumerate_cases(id, bounds)) {
      results.push_back(run_q_congruence_check(id, p, c.params));
    }
    return results;
  }
  fail(errc::unknown_check_id, "not a conjecture id: " + id);
}

}  // namespace qclab

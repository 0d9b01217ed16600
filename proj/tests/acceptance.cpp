// Acceptance suite: one line per criterion, nonzero exit iff any criterion
// fails. Time budgets are asserted in code, not just observed.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qclab/qclab.hpp"

using namespace qclab;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  bool ok = true;
  std::ostringstream detail;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n    [x] " << what;
    }
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  void finish(double budget_s = 0.0) {
    double t = seconds();
    if (budget_s > 0.0) expect(t <= budget_s, "exceeded time budget");
    std::printf("%s  %s  (%.1fs%s)%s\n", ok ? "PASS" : "FAIL", label.c_str(), t,
                budget_s > 0 ? (" / budget " + std::to_string(static_cast<int>(budget_s)) + "s").c_str() : "",
                detail.str().c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

void criterion1_f_table() {
  Criterion c("criterion 1: f-table reproduction (33 reference rows, exact)");
  for (const auto& row : reference_f_table()) {
    auto f = solve_f(row.p, row.m, row.r);
    if (!f) {
      c.expect(false, "no exponent found for (" + std::to_string(row.p) + "," + std::to_string(row.m) +
                          "," + std::to_string(row.r) + ")");
      continue;
    }
    if (!row.flagged) {
      if (*f != row.f) {
        c.expect(false, "(" + std::to_string(row.p) + "," + std::to_string(row.m) + "," +
                            std::to_string(row.r) + "): computed " + std::to_string(*f) +
                            " != reference " + std::to_string(row.f));
      }
    } else {
      // reference value is internally inconsistent (wrong even mod p); the
      // computed value must match the recurrence-derived one, and both values
      // are reported
      c.detail << "\n    [!] (" << row.p << "," << row.m << "," << row.r << "): computed " << *f
               << ", source table prints " << row.f << " (source value flagged inconsistent)";
      c.expect(*f == row.consistent, "flagged row does not match the recurrence-derived value");
      long long bound = brute_f_default_bound(row.p, row.m, row.r);
      c.expect(brute_f(row.p, row.m, row.r, bound) == *f, "flagged row fails the brute-force oracle");
    }
  }
  c.finish(60.0);
}

void criterion2_f_structure() {
  Criterion c("criterion 2: exponent structure (full s-range, symmetry, recurrence)");
  std::vector<FEntry> rows;
  for (long long p : {3LL, 5LL, 7LL}) {
    auto part = f_table({p}, reference_pairs_for(p));
    rows.insert(rows.end(), part.begin(), part.end());
  }
  for (const auto& e : rows) c.expect(e.found, "table row not solved");
  // the defining congruence must hold over the full admissible s-range of
  // every reproduced tuple, with the same exponent
  for (const auto& e : rows) {
    if (!e.found) continue;
    long long smax = frac_residue(-(e.m - e.r), e.m, static_cast<long>(e.p));
    for (long long s = 0; s <= smax; ++s) {
      if (!detail::f_congruence_holds(e.p, e.m, e.r, s, e.f)) {
        c.expect(false, "s-range break at (" + std::to_string(e.p) + "," + std::to_string(e.m) + "," +
                            std::to_string(e.r) + "), s=" + std::to_string(s));
      }
    }
  }
  CheckResult sym = check_f_symmetry(rows);
  CheckResult rec = check_f_recurrence(rows);
  c.expect(sym.status == Status::pass, "symmetry: " + sym.witness);
  c.expect(rec.status == Status::pass, "recurrence: " + rec.witness);
  if (sym.status == Status::pass && rec.status == Status::pass) {
    c.detail << "\n    symmetry pairs: " << param(sym.params, "pairs")
             << ", recurrence pairs: " << param(rec.params, "pairs");
  }
  c.finish();
}

void criterion3_identities() {
  Criterion c("criterion 3: identity suite, exact expansion on the full grids");
  auto results = run_identity_suite({}, {}, default_parallelism());
  ReportCounts counts = count_results(results);
  for (const auto& r : results) {
    if (r.status != Status::pass) c.expect(false, r.id + " " + params_str(r.params) + ": " + r.witness);
  }
  c.expect(counts.pass > 600, "unexpectedly small grid");
  // zero branch of the terminating 4phi3 evaluation and both branches of the
  // central-sum evaluation must be exercised
  bool aw_zero = false, l32_zero = false, l32_closed = false;
  for (const auto& cs : enumerate_cases("andrews-watson", {})) aw_zero |= cs.branch == "zero";
  for (const auto& cs : enumerate_cases("lemma3.2", {})) {
    l32_zero |= cs.branch == "zero";
    l32_closed |= cs.branch == "closed-form";
  }
  c.expect(aw_zero && l32_zero && l32_closed, "missing branch coverage");
  c.detail << "\n    " << counts.pass << " identities verified";
  c.finish(300.0);
}

void criterion4_q_congruences() {
  Criterion c("criterion 4: q-congruence suite for p in {3,5,7,11,13}");
  std::vector<long long> primes = {3, 5, 7, 11, 13};
  std::vector<std::string> ids = {"thm2.1",     "cor2.2",     "remark-cor2.2", "lemma3.1",
                                  "thm2.3-2.5", "thm2.3-2.6", "thm2.3-2.7",    "cor2.4",
                                  "lemma5.1",   "thm2.6",     "thm2.7-2.11",   "thm2.7-2.12",
                                  "cor2.8",     "eq6.5",      "eq6.6"};
  auto results = run_qcong_suite(ids, primes, {}, default_parallelism());
  ReportCounts counts = count_results(results);
  for (const auto& r : results) {
    if (r.status == Status::fail) c.expect(false, r.id + " " + params_str(r.params) + ": " + r.witness);
  }
  // skipped rows may only be whole-prime hypothesis exclusions
  for (const auto& r : results) {
    if (r.status == Status::skipped_precondition) {
      c.expect(r.witness == "no admissible cases", "unexpected skip: " + r.id + " " + params_str(r.params));
    }
  }
  // branch coverage at each prime: both conclusion branches of the central
  // q^2-binomial sum and of the base-q^m family
  for (long long p : primes) {
    bool closed21 = false, zero21 = false;
    for (const auto& cs : enumerate_cases("thm2.1", {{"p", p}})) {
      closed21 |= cs.branch == "closed-form";
      zero21 |= cs.branch == "zero";
    }
    c.expect(closed21 && zero21, "thm2.1 branch coverage at p=" + std::to_string(p));
    bool closed51 = false, zero51 = false;
    for (const auto& cs : enumerate_cases("lemma5.1", {{"p", p}})) {
      closed51 |= cs.branch == "closed-form";
      zero51 |= cs.branch == "zero";
    }
    c.expect(closed51 && zero51, "lemma5.1 branch coverage at p=" + std::to_string(p));
  }
  c.detail << "\n    " << counts.pass << " congruences verified, " << counts.skipped
           << " hypothesis-excluded prime rows shown";
  c.finish();
}

void criterion5_integer_congruences() {
  Criterion c("criterion 5: integer congruence suite for primes < 200");
  auto results = run_int_suite({}, 200, {}, default_parallelism());
  ReportCounts counts = count_results(results);
  for (const auto& r : results) {
    if (r.status == Status::fail) c.expect(false, r.id + " " + params_str(r.params) + ": " + r.witness);
  }
  // spot value: p = 5 gives 603 * 512^{-1} = 19 = 4 - 10 (mod 25)
  detail::IntCheck chk = detail::build_int_check("int1.3", 5, {});
  c.expect(chk.sum == make_rat(603, 512), "p=5 sum is not 603/512");
  c.expect(detail::rat_mod(chk.sum, 25) == 19, "p=5 residue is not 19");
  c.expect(chk.target == -6, "p=5 target is not 4x^2 - 2p = -6");
  c.detail << "\n    " << counts.pass << " congruences verified";
  c.finish(120.0);
}

void criterion6_conjecture_scans() {
  Criterion c("criterion 6: conjecture scans (evidence rows, all expected to pass)");
  std::size_t rows = 0;
  for (long long p : {5LL, 7LL}) {
    for (const std::string id : {"conj7.3", "conj7.4", "conj7.5", "conj7.6"}) {
      for (const auto& r : scan_conjecture(id, {{"p", p}})) {
        ++rows;
        if (r.status != Status::pass) {
          c.expect(false, r.id + " " + params_str(r.params) + ": " + r.witness);
        }
      }
    }
  }
  c.expect(rows > 100, "unexpectedly small scan");
  c.detail << "\n    " << rows << " scan rows";
  c.finish();
}

void criterion7_oracles() {
  Criterion c("criterion 7: oracle agreement and consistency properties");

  // two-stage solver vs linear-scan oracle on the whole p = 3 family
  for (long long r : {1, 3, 5, 7, 9, 11, 13}) {
    auto fast = solve_f(3, 2, r);
    auto slow = brute_f(3, 2, r, brute_f_default_bound(3, 2, r));
    c.expect(fast && slow && *fast == *slow, "solver/oracle disagree at r=" + std::to_string(r));
  }

  // q^{kp} = 1 + k(q-1)[p] (mod [p]^2)
  for (long p : {3L, 5L, 7L}) {
    Modulus ring = make_ring(p, 2);
    for (long long k = -3; k <= 3; ++k) {
      RElem lhs = qpow_mod(ring, k * p);
      RElem rhs = reduce(
          LPoly(1) + LPoly(static_cast<long>(k)) * (LPoly::variable(Var::q) - LPoly(1)) * qint(p), ring);
      c.expect(lhs == rhs, "q^{kp} expansion at p=" + std::to_string(p) + ", k=" + std::to_string(k));
    }
  }

  // q -> 1 summand consistency
  for (long long p : {5LL, 7LL}) {
    c.expect(q_to_one_consistency("cor2.2", p, {}).status == Status::pass, "cor2.2 q->1");
    c.expect(q_to_one_consistency("thm2.6", p, {{"s", 1}}).status == Status::pass, "thm2.6 q->1");
    c.expect(q_to_one_consistency("cor2.4", p, {{"m", 3}, {"s", 0}}).status == Status::pass,
             "cor2.4 q->1");
  }

  // ring axioms, >= 1000 random triples
  {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> expd(-5, 5);
    std::uniform_int_distribution<long> numd(-40, 40), dend(1, 5);
    std::uniform_int_distribution<int> nt(0, 4), pick(0, 3);
    auto rand_poly = [&]() {
      LPoly p;
      int n = nt(rng);
      for (int t = 0; t < n; ++t) {
        Monomial m;
        for (int v = 0; v <= pick(rng); ++v) m.e[v] = expd(rng);
        long num = numd(rng);
        if (num != 0) p += LPoly::monomial(m, make_rat(num, dend(rng)));
      }
      return p;
    };
    bool axioms = true;
    for (int i = 0; i < 1000; ++i) {
      LPoly a = rand_poly(), b = rand_poly(), d = rand_poly();
      axioms &= (a + b == b + a) && (a * b == b * a);
      axioms &= ((a + b) + d == a + (b + d)) && ((a * b) * d == a * (b * d));
      axioms &= (a * (b + d) == a * b + a * d) && (a + (-a)).is_zero();
    }
    c.expect(axioms, "ring axiom property suite");
  }

  // extended-Euclid inverses, >= 1000 random cases
  {
    std::mt19937 rng(171717);
    std::uniform_int_distribution<long> coeffd(-9, 9);
    long primes[] = {3, 5, 7, 11};
    bool inverses = true;
    int tested = 0;
    while (tested < 1000) {
      long p = primes[rng() % 4];
      int r = 1 + static_cast<int>(rng() % 2);
      Modulus ring = make_ring(p, r);
      LPoly f;
      long deg = static_cast<long>(rng() % (2 * (p - 1))) + 1;
      for (long i = 0; i <= deg; ++i) {
        long coeff = coeffd(rng);
        if (coeff != 0) f += LPoly(coeff) * qvar_pow(i);
      }
      if (f.is_zero()) continue;
      auto [quot, rem] = lp_divrem_q(f, qint(p));
      if (rem.is_zero()) continue;  // not a unit
      inverses &= rmul(invert(f, ring), reduce(f, ring)).is_one();
      ++tested;
    }
    c.expect(inverses, "extended-Euclid inverse property suite");
  }

  c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1_f_table();
  criterion2_f_structure();
  criterion3_identities();
  criterion4_q_congruences();
  criterion5_integer_congruences();
  criterion6_conjecture_scans();
  criterion7_oracles();
  if (g_failures == 0) {
    std::printf("all 7 criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qclab/qclab.hpp"

using namespace qclab;

namespace {
LPoly q() { return LPoly::variable(Var::q); }
}

TEST_CASE("registry left-hand sides match hand expansions") {
  // two-term expansion: 1 + q^2/((1+q)^2 (1+q^2))
  RFunc lhs = build_lhs({"cor2.2", {{"p", 3}}});
  LPoly den = (LPoly(1) + q()) * (LPoly(1) + q()) * (LPoly(1) + qvar_pow(2));
  CHECK(rf_equal(lhs, RFunc(den + qvar_pow(2), den)));
  // the p=3 sum is exactly [3]^2 times a unit
  CHECK(rf_equal(lhs, RFunc(qint(3) * qint(3), den)));

  RFunc lhs26 = build_lhs({"thm2.6", {{"p", 3}, {"s", 0}}});
  LPoly sq = (LPoly(1) + q()) * (LPoly(1) + q());
  CHECK(rf_equal(lhs26, RFunc(sq + LPoly(1), sq)));

  // the s = 0 case of the three-binomial sum coincides with the cubic sum
  RFunc lhs21 = build_lhs({"thm2.1", {{"p", 3}, {"s", 0}}});
  CHECK(rf_equal(lhs21, lhs));
}

TEST_CASE("registry right-hand sides") {
  CHECK(rf_equal(build_rhs({"thm2.6", {{"p", 3}, {"s", 0}}}), RFunc(-qvar_pow(-2))));
  CHECK(build_rhs({"thm2.1", {{"p", 3}, {"s", 0}}}).is_zero());  // parity selects 0
  CHECK_FALSE(build_rhs({"thm2.1", {{"p", 3}, {"s", 1}}}).is_zero());
}

TEST_CASE("q-congruence spot checks") {
  CHECK(run_q_congruence_check("cor2.2", 3, {}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.6", 3, {{"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.1", 5, {{"s", 1}}).status == Status::pass);
  // clearing denominators at p=3, s=0: q^2(1+q)^2 + q^2 + (1+q)^2 = [3]^2
  LPoly sq = (LPoly(1) + q()) * (LPoly(1) + q());
  CHECK(qvar_pow(2) * sq + qvar_pow(2) + sq == qint(3) * qint(3));
}

TEST_CASE("prefactor exponent of the central q^2-binomial sum") {
  // asserted numerically for (p, s) in {(5,0), (5,2), (13,0)}
  CHECK(run_q_congruence_check("thm2.1", 5, {{"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.1", 5, {{"s", 2}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.1", 13, {{"s", 0}}).status == Status::pass);
  // shifting the q-power prefactor by one must break the congruence
  reg::CongruencePair pair = reg::build_qcongruence("thm2.1", 5, {{"s", 0}});
  pair.rhs.num *= q();
  Modulus ring = make_ring(5, 2);
  CHECK_FALSE(rsub(reduce_frf(pair.lhs, ring), reduce_frf(pair.rhs, ring)).is_zero());
}

TEST_CASE("base-q^m family and its closed-form branch") {
  CHECK(run_q_congruence_check("thm2.3-2.5", 5, {{"m", 3}, {"r", 1}, {"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.3-2.6", 5, {{"m", 3}, {"r", 1}, {"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.3-2.7", 5, {{"m", 3}, {"r", 1}, {"s", 1}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.3-2.7", 7, {{"m", 3}, {"r", 1}, {"s", 0}}).status == Status::pass);
  // wrong-branch parameters are skipped
  CHECK(run_q_congruence_check("thm2.3-2.7", 5, {{"m", 3}, {"r", 1}, {"s", 0}}).status ==
        Status::skipped_precondition);
  CHECK(run_q_congruence_check("thm2.3-2.5", 5, {{"m", 3}, {"r", 1}, {"s", 1}}).status ==
        Status::skipped_precondition);
}

TEST_CASE("legendre-sign family and the resolved exponent") {
  CHECK(run_q_congruence_check("cor2.8", 5, {{"m", 3}, {"r", 1}, {"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("cor2.8", 5, {{"m", 3}, {"r", 2}, {"s", 1}}).status == Status::pass);
  CHECK(run_q_congruence_check("cor2.8", 7, {{"m", 4}, {"r", 3}, {"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("cor2.8", 7, {{"m", 6}, {"r", 1}, {"s", 0}}).status == Status::pass);

  // the (1-p^2)/4 exponent candidate for m = 3 fails at p = 5, the
  // r(m-r)(1-p^2)/(2m) = (1-p^2)/3 one passes
  long p = 5;
  reg::CongruencePair wrong{reg::two_poch_lhs(p, 3, 1, 0), {}, 1};
  FTerm alt;
  alt.scalar = Rat(legendre(-3, p));
  alt *= reg::Q((1 - p * p) / 4);
  wrong.rhs = fterm_value(alt);
  Modulus ring = make_ring(p, 1);
  CHECK_FALSE(rsub(reduce_frf(wrong.lhs, ring), reduce_frf(wrong.rhs, ring)).is_zero());
}

TEST_CASE("two-Pochhammer family") {
  CHECK(run_q_congruence_check("thm2.7-2.11", 7, {{"m", 4}, {"r", 3}, {"s", 1}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.7-2.11", 5, {{"m", 3}, {"r", 2}, {"s", 0}}).status == Status::pass);
  CHECK(run_q_congruence_check("thm2.7-2.12", 7, {{"m", 4}, {"r", 1}, {"s", 1}}).status == Status::pass);
  // p must be +-1 (mod m) for the collapsed exponent
  CHECK(run_q_congruence_check("thm2.7-2.12", 7, {{"m", 5}, {"r", 1}, {"s", 0}}).status ==
        Status::skipped_precondition);
}

TEST_CASE("binomial congruence composes with the central sum") {
  // verifying the k-indexed congruence for all k and then the sum-level
  // congruence for the same prime exercises the chained route
  for (long p : {5L, 7L}) {
    for (long long k = 0; k <= (p - 1) / 2; ++k) {
      CHECK(run_q_congruence_check("lemma3.1", p, {{"k", k}}).status == Status::pass);
    }
    for (long long s = 0; s <= (p - 1) / 2; ++s) {
      CHECK(run_q_congruence_check("thm2.1", p, {{"s", s}}).status == Status::pass);
    }
  }
}

TEST_CASE("modified-weight sum vanishes modulo [p] for p = 3 (mod 4)") {
  CHECK(run_q_congruence_check("remark-cor2.2", 3, {}).status == Status::pass);
  CHECK(run_q_congruence_check("remark-cor2.2", 7, {}).status == Status::pass);
  CHECK(run_q_congruence_check("remark-cor2.2", 11, {}).status == Status::pass);
  CHECK(run_q_congruence_check("remark-cor2.2", 5, {}).status == Status::skipped_precondition);
  CHECK(enumerate_cases("remark-cor2.2", {{"p", 5}}).empty());
}

TEST_CASE("pochhammer-over-factorial reductions") {
  for (auto [p, m] : std::vector<std::pair<long, long long>>{{3, 2}, {5, 3}, {7, 4}}) {
    for (long long k = 0; k <= p - 1; ++k) {
      CHECK(run_q_congruence_check("eq6.5", p, {{"m", m}, {"r", m - 1}, {"k", k}}).status ==
            Status::pass);
      CHECK(run_q_congruence_check("eq6.6", p, {{"m", m}, {"r", m - 1}, {"k", k}, {"s", 0}}).status ==
            Status::pass);
    }
  }
}

TEST_CASE("enumerations") {
  auto cases21 = enumerate_cases("thm2.1", {{"p", 5}});
  REQUIRE(cases21.size() == 3);
  CHECK(cases21[0].branch == "closed-form");  // s = 0
  CHECK(cases21[1].branch == "zero");         // s = 1
  CHECK(cases21[2].branch == "closed-form");  // s = 2

  // s-range bounded by min(<-1/3>_5, <-2/3>_5) = min(3, 1) = 1
  long long smax = -1;
  for (const std::string id : {"thm2.3-2.5", "thm2.3-2.6", "thm2.3-2.7"}) {
    for (const auto& c : enumerate_cases(id, {{"p", 5}})) {
      if (param(c.params, "m") == 3 && param(c.params, "r") == 1) {
        smax = std::max(smax, param(c.params, "s"));
      }
    }
  }
  CHECK(smax == 1);

  // cor2.8 at p=5, m=3, r=1: s <= <-2/3>_5 = 1
  long long smax28 = -1;
  for (const auto& c : enumerate_cases("cor2.8", {{"p", 5}})) {
    if (param(c.params, "m") == 3 && param(c.params, "r") == 1) {
      smax28 = std::max(smax28, param(c.params, "s"));
    }
  }
  CHECK(smax28 == 1);

  // branch coverage at p = 5: the central-sum family must exercise both
  // conclusion branches
  bool closed = false, zero = false;
  for (const auto& c : enumerate_cases("lemma5.1", {{"p", 5}})) {
    closed |= c.branch == "closed-form";
    zero |= c.branch == "zero";
  }
  CHECK(closed);
  CHECK(zero);
}

TEST_CASE("q = 1 summand consistency with the classical sums") {
  for (long p : {5L, 7L}) {
    CHECK(q_to_one_consistency("cor2.2", p, {}).status == Status::pass);
    CHECK(q_to_one_consistency("thm2.6", p, {{"s", 0}}).status == Status::pass);
    CHECK(q_to_one_consistency("thm2.6", p, {{"s", 2}}).status == Status::pass);
    CHECK(q_to_one_consistency("cor2.4", p, {{"m", 3}, {"s", 0}}).status == Status::pass);
    CHECK(q_to_one_consistency("thm2.1", p, {{"s", 1}}).status == Status::pass);
  }
  CHECK_THROWS_AS(q_to_one_consistency("lemma3.1", 5, {{"k", 1}}), error);
}

TEST_CASE("q = 1 limits") {
  // (1-q^2)/(1-q) -> 2
  CHECK(detail::rf_limit_q1(LPoly(1) - qvar_pow(2), LPoly(1) - q()) == Rat(2));
  // [3]^2/[3] -> 3
  CHECK(detail::rf_limit_q1(qint(3) * qint(3), qint(3)) == Rat(3));
  CHECK_THROWS_AS(detail::rf_limit_q1(LPoly(1), LPoly(1) - q()), error);
}

TEST_CASE("denominators sharing a factor with [p] are hard failures") {
  CheckResult r = detail::timed_check("synthetic", {}, []() -> CheckResult {
    fail(errc::not_invertible, "denominator shares a factor with the modulus");
  });
  CHECK(r.status == Status::fail);
  CheckResult s = detail::timed_check("synthetic", {}, []() -> CheckResult {
    fail(errc::precondition_violated, "outside the hypotheses");
  });
  CHECK(s.status == Status::skipped_precondition);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qclab/qclab.hpp"

using namespace qclab;

TEST_CASE("cubic central-binomial sum") {
  // p = 3: 1 + 8/64 = 9/8, divisible by 9 after clearing the denominator
  detail::IntCheck chk = detail::build_int_check("int1.2", 3, {});
  CHECK(chk.sum == make_rat(9, 8));
  CHECK(run_int_congruence_check("int1.2", 3, {}).status == Status::pass);
  CHECK(detail::rat_mod(chk.sum, 9) == 0);  // holds mod p^2 as well

  // p = 5: 603/512 = 19 = 4*1^2 - 2*5 (mod 25)
  detail::IntCheck chk5 = detail::build_int_check("int1.3", 5, {});
  CHECK(chk5.sum == make_rat(603, 512));
  CHECK(detail::invmod_u64(512 % 25, 25) == 23);
  CHECK(detail::rat_mod(chk5.sum, 25) == 19);
  CHECK(chk5.target == 4 - 10);
  CHECK(run_int_congruence_check("int1.3", 5, {}).status == Status::pass);
}

TEST_CASE("alternating sum with the two-square residue") {
  for (long p : {5L, 13L, 17L}) {
    CHECK(run_int_congruence_check("int1.1", p, {}).status == Status::pass);
  }
  for (long p : {7L, 11L, 19L}) {
    CHECK(run_int_congruence_check("int1.1", p, {}).status == Status::pass);  // zero branch
  }
  // the alternating form needs p >= 5: at p = 3 the sum is 3/4 = 3 (mod 9)
  CHECK(run_int_congruence_check("int1.1", 3, {}).status == Status::skipped_precondition);
  CHECK(enumerate_cases("int1.1", {{"p", 3}}).empty());
}

TEST_CASE("legendre-symbol sums") {
  CHECK(run_int_congruence_check("int1.12", 5, {{"s", 0}}).status == Status::pass);
  detail::IntCheck chk = detail::build_int_check("int1.12", 5, {{"s", 0}});
  CHECK(chk.target == legendre(-1, 5));
  CHECK(chk.target == 1);
  for (long p : {5L, 7L, 11L, 13L}) {
    for (long long s = 0; s <= (p - 1) / 2; ++s) {
      CHECK(run_int_congruence_check("int1.12", p, {{"s", s}}).status == Status::pass);
    }
    for (const std::string id : {"int1.8", "int1.9", "int1.10", "int1.11"}) {
      CHECK(run_int_congruence_check(id, p, {}).status == Status::pass);
    }
  }
}

TEST_CASE("rational-binomial sum for a = -1/2, -1/3, -1/4, -1/6") {
  int ran = 0;
  for (long p = 3; p <= 53; p += 2) {
    if (!is_prime(p)) continue;
    for (const auto& c : enumerate_cases("int1.7", {{"p", p}})) {
      CHECK(run_int_congruence_check("int1.7", p, c.params).status == Status::pass);
      ++ran;
    }
  }
  CHECK(ran > 10);
  // <a>_p even is outside the hypotheses: <-1/2>_5 = 2
  CHECK(run_int_congruence_check("int1.7", 5, {{"u", 1}, {"v", 2}}).status ==
        Status::skipped_precondition);
}

TEST_CASE("product families in their stated prime classes") {
  for (long p = 5; p <= 60; p += 2) {
    if (!is_prime(p)) continue;
    for (const std::string id : {"int1.4", "int1.5", "int1.6"}) {
      for (const auto& c : enumerate_cases(id, {{"p", p}})) {
        CHECK(run_int_congruence_check(id, p, c.params).status == Status::pass);
      }
    }
  }
}

TEST_CASE("three-binomial generalization and the central binomial square") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (const auto& c : enumerate_cases("int2.1", {{"p", p}})) {
      CHECK(run_int_congruence_check("int2.1", p, c.params).status == Status::pass);
    }
  }
  CHECK(run_int_congruence_check("int2.4", 5, {}).status == Status::pass);
  CHECK(run_int_congruence_check("int2.4", 13, {}).status == Status::pass);
  CHECK(run_int_congruence_check("int2.4", 7, {}).status == Status::skipped_precondition);
}

TEST_CASE("denominator invertibility is checked, not assumed") {
  CHECK_THROWS_AS(detail::rat_mod(make_rat(1, 3), 9), error);
  CHECK(detail::rat_mod(make_rat(1, 2), 9) == 5);  // 2 * 5 = 10 = 1 (mod 9)
}

TEST_CASE("generalized binomial coefficients") {
  CHECK(binom_rat(make_rat(-1, 2), 2) == make_rat(3, 8));
  CHECK(binom_rat(Rat(5), 2) == Rat(10));
  CHECK(binom_rat(make_rat(-1, 3), 0) == Rat(1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qclab/residue.hpp"

using namespace qclab;

namespace {
LPoly q() { return LPoly::variable(Var::q); }
}

TEST_CASE("primality") {
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));  // 7 * 13
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(999983));
}

TEST_CASE("ring construction") {
  CHECK(make_ring(3, 1).modpoly() == LPoly(1) + q() + qvar_pow(2));
  LPoly sq = LPoly(1) + LPoly(2) * q() + LPoly(3) * qvar_pow(2) + LPoly(2) * qvar_pow(3) + qvar_pow(4);
  CHECK(make_ring(3, 2).modpoly() == sq);
  CHECK_THROWS_AS(make_ring(9, 1), error);
  CHECK_THROWS_AS(make_ring(2, 1), error);
  CHECK(make_ring(5, 2).degree() == 8);
}

TEST_CASE("reduction") {
  Modulus r31 = make_ring(3, 1);
  // q^5 = q^2 in the ring; the canonical representative has degree < p-1
  CHECK(reduce(qvar_pow(5), r31) == reduce(qvar_pow(2), r31));
  CHECK(reduce(qvar_pow(5), r31).rep.max_exp(Var::q) < 2);
  CHECK(reduce(qvar_pow(-2), r31).rep == q());
  CHECK(reduce(qvar_pow(3), make_ring(3, 2)).rep == qvar_pow(3));
  CHECK_THROWS_AS(reduce(q() * LPoly::variable(Var::x), r31), error);
}

TEST_CASE("inversion") {
  Modulus r31 = make_ring(3, 1);
  CHECK(invert(LPoly(1) + q(), r31).rep == -q());
  CHECK(rmul(invert(LPoly(1) + q(), r31), reduce(LPoly(1) + q(), r31)).is_one());
  CHECK(invert(q(), r31) == reduce(qvar_pow(2), r31));  // q^3 = 1
  CHECK_THROWS_AS(invert(LPoly(1) + q() + qvar_pow(2), make_ring(3, 2)), error);
}

TEST_CASE("ratio reduction") {
  Modulus r32 = make_ring(3, 2);
  // 1 + q^2/((1+q)^2 (1+q^2)) has numerator exactly [3]^2
  LPoly den = (LPoly(1) + q()) * (LPoly(1) + q()) * (LPoly(1) + qvar_pow(2));
  RElem combined = radd(reduce(LPoly(1), r32), reduce_ratio(qvar_pow(2), den, r32));
  CHECK(combined.is_zero());

  RElem cancel = reduce_ratio(LPoly(1) - qvar_pow(2), LPoly(1) - q(), r32);
  CHECK(cancel == reduce(LPoly(1) + q(), r32));

  CHECK_THROWS_AS(reduce_ratio(LPoly(1), qint(3), make_ring(3, 1)), error);
}

TEST_CASE("powers of q in the ring") {
  CHECK(qpow_mod(make_ring(3, 1), 5) == reduce(qvar_pow(2), make_ring(3, 1)));
  CHECK(qpow_mod(make_ring(3, 1), 0).is_one());
  Modulus r32 = make_ring(3, 2);
  RElem neg = qpow_mod(r32, -2);
  CHECK(rmul(neg, qpow_mod(r32, 2)).is_one());
  CHECK(neg == reduce(qvar_pow(-2), r32));
}

TEST_CASE("inverse property over random polynomials") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long> coeffd(-9, 9);
  int tested = 0;
  while (tested < 1000) {
    long p = std::vector<long>{3, 5, 7, 11}[rng() % 4];
    int r = 1 + static_cast<int>(rng() % 2);
    Modulus ring = make_ring(p, r);
    LPoly f;
    long deg = static_cast<long>(rng() % (2 * (p - 1))) + 1;
    for (long i = 0; i <= deg; ++i) {
      long coeff = coeffd(rng);
      if (coeff != 0) f += LPoly(coeff) * qvar_pow(i);
    }
    if (f.is_zero()) continue;
    // skip multiples of [p]
    auto [quot, rem] = lp_divrem_q(f, qint(p));
    if (rem.is_zero()) {
      CHECK_THROWS_AS(invert(f, ring), error);
      ++tested;
      continue;
    }
    CHECK(rmul(invert(f, ring), reduce(f, ring)).is_one());
    ++tested;
  }
}

TEST_CASE("q^p identities") {
  for (long p : {3L, 5L, 7L, 11L}) {
    CHECK(qpow_mod(make_ring(p, 1), p).is_one());
    // q^p - 1 - (q-1)[p] = 0 exactly
    CHECK((qvar_pow(p) - LPoly(1) - (q() - LPoly(1)) * qint(p)).is_zero());
  }
}

TEST_CASE("legendre symbol") {
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 3) == -1);
  CHECK(legendre(-3, 7) == 1);  // (-3)^3 = -27 = 1 (mod 7)
  CHECK(legendre(10, 5) == 0);
  // Euler criterion cross-check against a brute-force square scan
  for (long p : {5L, 7L, 11L, 13L, 17L}) {
    for (long a = 1; a < p; ++a) {
      bool square = false;
      for (long t = 1; t < p; ++t) {
        if ((t * t) % p == a) square = true;
      }
      CHECK(legendre(a, p) == (square ? 1 : -1));
    }
  }
}

TEST_CASE("fractional residues") {
  CHECK(frac_residue(-1, 2, 5) == 2);
  CHECK(frac_residue(-1, 3, 7) == 2);
  CHECK(frac_residue(-2, 3, 7) == 4);
  CHECK_THROWS_AS(frac_residue(-1, 3, 3), error);

  // complement identity: <-r/m>_p + <-(m-r)/m>_p = p - 1
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long m = 1; m <= 9; ++m) {
      if (m % p == 0) continue;
      for (long r = 1; r < m; ++r) {
        CHECK(frac_residue(-r, m, p) + frac_residue(-(m - r), m, p) == p - 1);
      }
    }
  }
}

TEST_CASE("sign identities linking residues and legendre symbols") {
  for (long p = 5; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    CHECK((frac_residue(-1, 3, p) % 2 == 0 ? 1 : -1) == legendre(-3, p));
    CHECK((frac_residue(-1, 4, p) % 2 == 0 ? 1 : -1) == legendre(-2, p));
    CHECK((frac_residue(-1, 6, p) % 2 == 0 ? 1 : -1) == legendre(-1, p));
  }
}

TEST_CASE("two-square decompositions") {
  CHECK(two_square(5, TwoSquareConvention::x_odd) == std::pair<long, long>{1, 2});
  CHECK(two_square(13, TwoSquareConvention::x_odd) == std::pair<long, long>{3, 2});
  CHECK(two_square(13, TwoSquareConvention::x_one_mod_4) == std::pair<long, long>{-3, 2});
  CHECK_THROWS_AS(two_square(7, TwoSquareConvention::x_odd), error);
  for (long p = 5; p < 200; ++p) {
    if (!is_prime(p) || p % 4 != 1) continue;
    auto [x1, y1] = two_square(p, TwoSquareConvention::x_odd);
    auto [x2, y2] = two_square(p, TwoSquareConvention::x_one_mod_4);
    CHECK(x1 * x1 + y1 * y1 == p);
    CHECK(x1 % 2 != 0);
    CHECK(x1 > 0);
    CHECK(((x2 % 4) + 4) % 4 == 1);
    CHECK(4 * x1 * x1 == 4 * x2 * x2);  // convention-independent combination
  }
}

TEST_CASE("factored reduction keeps denominators honest") {
  Modulus r31 = make_ring(3, 1);
  FRFunc zero_num{LPoly(0), {qint(3)}};
  CHECK_THROWS_AS(reduce_frf(zero_num, r31), error);
  FRFunc ok{LPoly(1) - qvar_pow(2), {LPoly(1) - q()}};
  CHECK(reduce_frf(ok, r31) == reduce(LPoly(1) + q(), r31));
}

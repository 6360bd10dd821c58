#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bicensus/bi_series.hpp"
#include "doctest.h"

using namespace bicensus;

namespace {

BiSeries random_series(std::mt19937& rng, int tr, int ts, bool zero_const = false) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  BiSeries s(tr, ts);
  for (int r = 0; r <= tr; ++r)
    for (int q = 0; q <= ts; ++q) {
      if (zero_const && r == 0 && q == 0) continue;
      Rat c(num(rng), den(rng));
      c.canonicalize();
      s.set_coeff(r, q, c);
    }
  return s;
}

}  // namespace

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20260826);
  for (int rep = 0; rep < 10; ++rep) {
    BiSeries a = random_series(rng, 5, 5);
    BiSeries b = random_series(rng, 5, 5);
    BiSeries c = random_series(rng, 5, 5);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(sub(a, a).is_zero());
    CHECK(mul(a, BiSeries::one(5, 5)) == a);
  }
}

TEST_CASE("Euler operators obey the product rule") {
  std::mt19937 rng(3);
  BiSeries a = random_series(rng, 5, 5);
  BiSeries b = random_series(rng, 5, 5);
  CHECK(euler_x(mul(a, b)) == add(mul(euler_x(a), b), mul(a, euler_x(b))));
  CHECK(euler_y(mul(a, b)) == add(mul(euler_y(a), b), mul(a, euler_y(b))));
  // D_x and D_y commute
  CHECK(euler_x(euler_y(a)) == euler_y(euler_x(a)));
}

TEST_CASE("exp of a zero-constant series") {
  std::mt19937 rng(5);
  BiSeries a = random_series(rng, 4, 4, true);
  BiSeries b = random_series(rng, 4, 4, true);
  BiSeries ea = exp_zero_const(a);
  CHECK(ea.coeff(0, 0) == 1);
  // exp(a+b) = exp(a) exp(b)
  CHECK(exp_zero_const(add(a, b)) == mul(ea, exp_zero_const(b)));
  // exp(-log(1-a)) = 1/(1-a)
  CHECK(exp_zero_const(-log_one_minus(a)) == geom_inv(a));
  // direct power-series check against sum_j a^j / j!
  BiSeries acc = BiSeries::one(4, 4);
  BiSeries apow = BiSeries::one(4, 4);
  Int fact(1);
  for (int j = 1; j <= 8; ++j) {
    apow = mul(apow, a);
    fact *= j;
    Rat c(1, fact);
    c.canonicalize();
    acc = add(acc, scale(c, apow));
  }
  CHECK(ea == acc);
  BiSeries bad = random_series(rng, 3, 3);
  bad.set_coeff(0, 0, Rat(2));
  CHECK_THROWS(exp_zero_const(bad));
}

TEST_CASE("geom_inv and log_one_minus") {
  std::mt19937 rng(9);
  BiSeries a = random_series(rng, 4, 4, true);
  BiSeries inv = geom_inv(a);
  CHECK(sub(inv, mul(a, inv)) == BiSeries::one(4, 4));
  // D_x log(1-a) = -D_x a / (1-a)
  CHECK(euler_x(log_one_minus(a)) == -mul(euler_x(a), inv));
}

TEST_CASE("diagonal is a ring homomorphism") {
  std::mt19937 rng(13);
  BiSeries a = random_series(rng, 6, 6);
  BiSeries b = random_series(rng, 6, 6);
  CHECK(diagonal(mul(a, b)) == u_mul(diagonal(a), diagonal(b)));
  CHECK(diagonal(add(a, b)) == u_add(diagonal(a), diagonal(b)));
  BiSeries rect(3, 5);
  CHECK_THROWS(diagonal(rect));
}

TEST_CASE("counts and monomials") {
  BiSeries s = BiSeries::monomial(2, 3, Rat(1, 12), 4, 4);
  CHECK(s.count(2, 3) == 1);  // (1/12) * 2! * 3!
  CHECK(s.count(0, 0) == 0);
  BiSeries t(2, 2);
  t.set_coeff(1, 1, Rat(1, 3));
  CHECK_THROWS(t.count(1, 1));
}

TEST_CASE("bi_pow") {
  std::mt19937 rng(17);
  BiSeries a = random_series(rng, 4, 4);
  CHECK(bi_pow(a, 0) == BiSeries::one(4, 4));
  CHECK(bi_pow(a, 3) == mul(a, mul(a, a)));
  CHECK_THROWS(bi_pow(a, -1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "bicensus/uni_series.hpp"
#include "doctest.h"

using namespace bicensus;

namespace {

UniSeries random_series(std::mt19937& rng, int trunc, bool zero_const = false) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  UniSeries s(trunc);
  for (int n = zero_const ? 1 : 0; n <= trunc; ++n) {
    Rat c(num(rng), den(rng));
    c.canonicalize();
    s.set_coeff(n, c);
  }
  return s;
}

}  // namespace

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(20260826);
  for (int rep = 0; rep < 20; ++rep) {
    UniSeries a = random_series(rng, 8);
    UniSeries b = random_series(rng, 8);
    UniSeries c = random_series(rng, 8);
    CHECK(u_add(a, b) == u_add(b, a));
    CHECK(u_mul(a, b) == u_mul(b, a));
    CHECK(u_add(u_add(a, b), c) == u_add(a, u_add(b, c)));
    CHECK(u_mul(u_mul(a, b), c) == u_mul(a, u_mul(b, c)));
    CHECK(u_mul(a, u_add(b, c)) == u_add(u_mul(a, b), u_mul(a, c)));
    CHECK(u_sub(a, a).is_zero());
    CHECK(u_mul(a, UniSeries::one(8)) == a);
  }
}

TEST_CASE("geometric inverse") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 10; ++rep) {
    UniSeries a = random_series(rng, 10, true);
    UniSeries inv = u_geom_inv(a);
    // (1 - a) * inv == 1
    UniSeries lhs = u_sub(inv, u_mul(a, inv));
    CHECK(lhs == UniSeries::one(10));
  }
  UniSeries bad(5);
  bad.set_coeff(0, Rat(1));
  CHECK_THROWS(u_geom_inv(bad));
}

TEST_CASE("geometric series coefficients") {
  UniSeries y(6);
  y.set_coeff(1, Rat(1));
  UniSeries g = u_geom_inv(y);
  for (int n = 0; n <= 6; ++n) CHECK(g.coeff(n) == 1);
}

TEST_CASE("u_pow matches repeated multiplication") {
  std::mt19937 rng(11);
  UniSeries a = random_series(rng, 7);
  UniSeries acc = UniSeries::one(7);
  for (int p = 0; p <= 4; ++p) {
    CHECK(u_pow(a, p) == acc);
    acc = u_mul(acc, a);
  }
}

TEST_CASE("count converts ordinary coefficients to EGF counts") {
  UniSeries s(4);
  s.set_coeff(3, Rat(4, 3));  // 4/3 * 3! = 8
  CHECK(s.count(3) == 8);
  CHECK(s.count(0) == 0);
  s.set_coeff(2, Rat(1, 3));  // 1/3 * 2! not an integer
  CHECK_THROWS(s.count(2));
}

TEST_CASE("binary ops align to the shorter truncation") {
  UniSeries a(4), b(8);
  a.set_coeff(4, Rat(1));
  b.set_coeff(4, Rat(1));
  b.set_coeff(8, Rat(5));
  CHECK(u_add(a, b).trunc_n() == 4);
  CHECK(a == b);  // equality compares up to the common truncation
  UniSeries c = b.truncated(4);
  CHECK(c.trunc_n() == 4);
  CHECK(c.coeff(4) == 1);
}

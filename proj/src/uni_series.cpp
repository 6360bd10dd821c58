#include "bicensus/uni_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicensus {

Int UniSeries::count(int n) const {
  if (n < 0 || n > trunc_n()) throw std::out_of_range("UniSeries::count: index out of range");
  Rat v = c_[n] * Rat(factorial(n));
  v.canonicalize();
  if (v.get_den() != 1) throw std::runtime_error("UniSeries::count: non-integer count");
  return v.get_num();
}

bool UniSeries::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

UniSeries UniSeries::one(int trunc_n) {
  UniSeries r(trunc_n);
  r.set_coeff(0, Rat(1));
  return r;
}

UniSeries UniSeries::truncated(int trunc_n) const {
  UniSeries r(trunc_n);
  for (int n = 0; n <= std::min(trunc_n, this->trunc_n()); ++n) r.set_coeff(n, c_[n]);
  return r;
}

UniSeries u_add(const UniSeries& a, const UniSeries& b) {
  int t = std::min(a.trunc_n(), b.trunc_n());
  UniSeries r(t);
  for (int n = 0; n <= t; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
  return r;
}

UniSeries u_sub(const UniSeries& a, const UniSeries& b) {
  int t = std::min(a.trunc_n(), b.trunc_n());
  UniSeries r(t);
  for (int n = 0; n <= t; ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
  return r;
}

UniSeries u_mul(const UniSeries& a, const UniSeries& b) {
  int t = std::min(a.trunc_n(), b.trunc_n());
  UniSeries r(t);
  for (int i = 0; i <= t; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= t; ++j) {
      if (b.coeff(j) == 0) continue;
      r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    }
  }
  return r;
}

UniSeries u_scale(const Rat& v, const UniSeries& a) {
  UniSeries r(a.trunc_n());
  for (int n = 0; n <= a.trunc_n(); ++n) r.set_coeff(n, v * a.coeff(n));
  return r;
}

UniSeries u_pow(const UniSeries& a, int p) {
  if (p < 0) throw std::invalid_argument("u_pow: negative exponent");
  UniSeries r = UniSeries::one(a.trunc_n());
  for (int i = 0; i < p; ++i) r = u_mul(r, a);
  return r;
}

UniSeries u_geom_inv(const UniSeries& a) {
  if (!a.has_zero_const()) throw std::invalid_argument("u_geom_inv: nonzero constant term");
  // b = 1 + a*b, solved coefficient by coefficient.
  int t = a.trunc_n();
  UniSeries b(t);
  b.set_coeff(0, Rat(1));
  for (int n = 1; n <= t; ++n) {
    Rat acc(0);
    for (int j = 1; j <= n; ++j)
      if (a.coeff(j) != 0) acc += a.coeff(j) * b.coeff(n - j);
    b.set_coeff(n, acc);
  }
  return b;
}

const Rat& u_coeff(const UniSeries& a, int n) {
  if (n < 0 || n > a.trunc_n()) throw std::out_of_range("u_coeff: index out of range");
  return a.coeff(n);
}

bool operator==(const UniSeries& a, const UniSeries& b) {
  int t = std::min(a.trunc_n(), b.trunc_n());
  for (int n = 0; n <= t; ++n)
    if (a.coeff(n) != b.coeff(n)) return false;
  return true;
}

}  // namespace bicensus

#include "bicensus/bi_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicensus {

BiSeries::BiSeries(int trunc_r, int trunc_s)
    : tr_(trunc_r), ts_(trunc_s),
      c_(trunc_r + 1, std::vector<Rat>(trunc_s + 1, Rat(0))) {
  if (trunc_r < 0 || trunc_s < 0) throw std::invalid_argument("BiSeries: negative truncation");
}

Int BiSeries::count(int r, int s) const {
  if (r < 0 || r > tr_ || s < 0 || s > ts_)
    throw std::out_of_range("BiSeries::count: index out of range");
  Rat v = c_[r][s] * Rat(factorial(r) * factorial(s));
  v.canonicalize();
  if (v.get_den() != 1) throw std::runtime_error("BiSeries::count: non-integer count");
  return v.get_num();
}

bool BiSeries::is_zero() const {
  for (const auto& row : c_)
    for (const Rat& v : row)
      if (v != 0) return false;
  return true;
}

BiSeries BiSeries::one(int trunc_r, int trunc_s) {
  BiSeries r(trunc_r, trunc_s);
  r.set_coeff(0, 0, Rat(1));
  return r;
}

BiSeries BiSeries::monomial(int r, int s, const Rat& v, int trunc_r, int trunc_s) {
  BiSeries a(trunc_r, trunc_s);
  if (r <= trunc_r && s <= trunc_s) a.set_coeff(r, s, v);
  return a;
}

BiSeries BiSeries::truncated(int trunc_r, int trunc_s) const {
  BiSeries r(trunc_r, trunc_s);
  for (int i = 0; i <= std::min(trunc_r, tr_); ++i)
    for (int j = 0; j <= std::min(trunc_s, ts_); ++j)
      r.set_coeff(i, j, c_[i][j]);
  return r;
}

BiSeries add(const BiSeries& a, const BiSeries& b) {
  int tr = std::min(a.tr_, b.tr_), ts = std::min(a.ts_, b.ts_);
  BiSeries r(tr, ts);
  for (int i = 0; i <= tr; ++i)
    for (int j = 0; j <= ts; ++j)
      r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
  return r;
}

BiSeries sub(const BiSeries& a, const BiSeries& b) {
  int tr = std::min(a.tr_, b.tr_), ts = std::min(a.ts_, b.ts_);
  BiSeries r(tr, ts);
  for (int i = 0; i <= tr; ++i)
    for (int j = 0; j <= ts; ++j)
      r.c_[i][j] = a.c_[i][j] - b.c_[i][j];
  return r;
}

BiSeries mul(const BiSeries& a, const BiSeries& b) {
  int tr = std::min(a.tr_, b.tr_), ts = std::min(a.ts_, b.ts_);
  BiSeries r(tr, ts);
  for (int i = 0; i <= tr; ++i)
    for (int j = 0; j <= ts; ++j) {
      if (a.c_[i][j] == 0) continue;
      for (int p = 0; i + p <= tr; ++p)
        for (int q = 0; j + q <= ts; ++q) {
          if (b.c_[p][q] == 0) continue;
          r.c_[i + p][j + q] += a.c_[i][j] * b.c_[p][q];
        }
    }
  return r;
}

BiSeries scale(const Rat& v, const BiSeries& a) {
  BiSeries r(a.tr_, a.ts_);
  for (int i = 0; i <= a.tr_; ++i)
    for (int j = 0; j <= a.ts_; ++j)
      r.c_[i][j] = v * a.c_[i][j];
  return r;
}

bool operator==(const BiSeries& a, const BiSeries& b) {
  int tr = std::min(a.tr_, b.tr_), ts = std::min(a.ts_, b.ts_);
  for (int i = 0; i <= tr; ++i)
    for (int j = 0; j <= ts; ++j)
      if (a.c_[i][j] != b.c_[i][j]) return false;
  return true;
}

BiSeries euler_x(const BiSeries& a) {
  BiSeries r(a.trunc_r(), a.trunc_s());
  for (int i = 0; i <= a.trunc_r(); ++i)
    for (int j = 0; j <= a.trunc_s(); ++j)
      r.set_coeff(i, j, Rat(i) * a.coeff(i, j));
  return r;
}

BiSeries euler_y(const BiSeries& a) {
  BiSeries r(a.trunc_r(), a.trunc_s());
  for (int i = 0; i <= a.trunc_r(); ++i)
    for (int j = 0; j <= a.trunc_s(); ++j)
      r.set_coeff(i, j, Rat(j) * a.coeff(i, j));
  return r;
}

BiSeries exp_zero_const(const BiSeries& a) {
  if (!a.has_zero_const()) throw std::invalid_argument("exp_zero_const: nonzero constant term");
  int tr = a.trunc_r(), ts = a.trunc_s();
  BiSeries e(tr, ts);
  e.set_coeff(0, 0, Rat(1));
  // D_x e = e * D_x a on coefficients with r >= 1; the pure-y column uses the
  // D_y recurrence instead.  Filling by ascending total degree keeps every
  // read on already-known coefficients.
  for (int n = 1; n <= tr + ts; ++n) {
    for (int r = std::max(0, n - ts); r <= std::min(n, tr); ++r) {
      int s = n - r;
      Rat acc(0);
      if (r >= 1) {
        for (int i = 1; i <= r; ++i)
          for (int j = 0; j <= s; ++j) {
            if (a.coeff(i, j) == 0) continue;
            acc += Rat(i) * a.coeff(i, j) * e.coeff(r - i, s - j);
          }
        acc /= r;
      } else {
        for (int j = 1; j <= s; ++j) {
          if (a.coeff(0, j) == 0) continue;
          acc += Rat(j) * a.coeff(0, j) * e.coeff(0, s - j);
        }
        acc /= s;
      }
      e.set_coeff(r, s, acc);
    }
  }
  return e;
}

BiSeries geom_inv(const BiSeries& a) {
  if (!a.has_zero_const()) throw std::invalid_argument("geom_inv: nonzero constant term");
  // b = 1 + a*b by ascending total degree; identical to the truncated
  // geometric sum since a has minimal degree >= 1.
  int tr = a.trunc_r(), ts = a.trunc_s();
  BiSeries b(tr, ts);
  b.set_coeff(0, 0, Rat(1));
  for (int n = 1; n <= tr + ts; ++n) {
    for (int r = std::max(0, n - ts); r <= std::min(n, tr); ++r) {
      int s = n - r;
      Rat acc(0);
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= s; ++j) {
          if (i + j == 0) continue;
          if (a.coeff(i, j) == 0) continue;
          acc += a.coeff(i, j) * b.coeff(r - i, s - j);
        }
      b.set_coeff(r, s, acc);
    }
  }
  return b;
}

BiSeries log_one_minus(const BiSeries& a) {
  if (!a.has_zero_const()) throw std::invalid_argument("log_one_minus: nonzero constant term");
  int tr = a.trunc_r(), ts = a.trunc_s();
  BiSeries r(tr, ts);
  BiSeries apow = BiSeries::one(tr, ts);
  for (int k = 1; k <= tr + ts; ++k) {
    apow = mul(apow, a);
    if (apow.is_zero()) break;
    r = sub(r, scale(Rat(1, k), apow));
  }
  return r;
}

BiSeries bi_pow(const BiSeries& a, int p) {
  if (p < 0) throw std::invalid_argument("bi_pow: negative exponent");
  BiSeries r = BiSeries::one(a.trunc_r(), a.trunc_s());
  for (int i = 0; i < p; ++i) r = mul(r, a);
  return r;
}

UniSeries diagonal(const BiSeries& a) {
  if (a.trunc_r() != a.trunc_s())
    throw std::invalid_argument("diagonal: truncations differ");
  int t = a.trunc_r();
  UniSeries d(t);
  for (int n = 0; n <= t; ++n) {
    Rat acc(0);
    for (int r = 0; r <= n; ++r) acc += a.coeff(r, n - r);
    d.set_coeff(n, acc);
  }
  return d;
}

}  // namespace bicensus

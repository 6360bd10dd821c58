#ifndef BICENSUS_BI_SERIES_HPP
#define BICENSUS_BI_SERIES_HPP

#include <vector>

#include "bicensus/rational.hpp"
#include "bicensus/uni_series.hpp"

namespace bicensus {

// Truncated bivariate Taylor series over exact rationals.  The grid holds
// ordinary coefficients c[r][s]; the EGF count at (r,s) is c[r][s]*r!*s!.
// Binary operations align truncation to the componentwise minimum.
class BiSeries {
 public:
  BiSeries() : tr_(0), ts_(0), c_(1, std::vector<Rat>(1, Rat(0))) {}
  BiSeries(int trunc_r, int trunc_s);

  int trunc_r() const { return tr_; }
  int trunc_s() const { return ts_; }

  const Rat& coeff(int r, int s) const { return c_[r][s]; }
  void set_coeff(int r, int s, const Rat& v) { c_[r][s] = v; }

  // EGF count c[r][s]*r!*s!; throws if the result is not an integer.
  Int count(int r, int s) const;

  bool is_zero() const;
  bool has_zero_const() const { return c_[0][0] == 0; }

  static BiSeries zero(int trunc_r, int trunc_s) { return BiSeries(trunc_r, trunc_s); }
  static BiSeries one(int trunc_r, int trunc_s);
  static BiSeries monomial(int r, int s, const Rat& v, int trunc_r, int trunc_s);

  BiSeries truncated(int trunc_r, int trunc_s) const;

  friend BiSeries add(const BiSeries& a, const BiSeries& b);
  friend BiSeries sub(const BiSeries& a, const BiSeries& b);
  friend BiSeries mul(const BiSeries& a, const BiSeries& b);
  friend BiSeries scale(const Rat& v, const BiSeries& a);
  friend bool operator==(const BiSeries& a, const BiSeries& b);

  BiSeries operator-() const { return scale(Rat(-1), *this); }

 private:
  int tr_, ts_;
  std::vector<std::vector<Rat>> c_;
};

BiSeries add(const BiSeries& a, const BiSeries& b);
BiSeries sub(const BiSeries& a, const BiSeries& b);
BiSeries mul(const BiSeries& a, const BiSeries& b);
BiSeries scale(const Rat& v, const BiSeries& a);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return sub(a, b); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return mul(a, b); }

// D_x = x d/dx: scales c[r][s] by r.
BiSeries euler_x(const BiSeries& a);
// D_y = y d/dy: scales c[r][s] by s.
BiSeries euler_y(const BiSeries& a);

// exp(a) for a with zero constant term, by ascending total degree.
BiSeries exp_zero_const(const BiSeries& a);

// 1/(1-a) for a with zero constant term.
BiSeries geom_inv(const BiSeries& a);

// log(1-a) for a with zero constant term.
BiSeries log_one_minus(const BiSeries& a);

// Integer power, p >= 0.
BiSeries bi_pow(const BiSeries& a, int p);

// Diagonal y = x: d[n] = sum_{r+s=n} c[r][s].  Requires trunc_r == trunc_s.
UniSeries diagonal(const BiSeries& a);

}  // namespace bicensus

#endif

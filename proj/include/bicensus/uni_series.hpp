#ifndef BICENSUS_UNI_SERIES_HPP
#define BICENSUS_UNI_SERIES_HPP

#include <vector>

#include "bicensus/rational.hpp"

namespace bicensus {

// Truncated univariate Taylor series over exact rationals; ordinary
// coefficients, EGF count at n is c[n]*n!.
class UniSeries {
 public:
  UniSeries() : c_(1, Rat(0)) {}
  explicit UniSeries(int trunc_n) : c_(trunc_n + 1, Rat(0)) {}

  int trunc_n() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& coeff(int n) const { return c_[n]; }
  void set_coeff(int n, const Rat& v) { c_[n] = v; }

  Int count(int n) const;

  bool is_zero() const;
  bool has_zero_const() const { return c_[0] == 0; }

  static UniSeries one(int trunc_n);

  UniSeries truncated(int trunc_n) const;

 private:
  std::vector<Rat> c_;
};

UniSeries u_add(const UniSeries& a, const UniSeries& b);
UniSeries u_sub(const UniSeries& a, const UniSeries& b);
UniSeries u_mul(const UniSeries& a, const UniSeries& b);
UniSeries u_scale(const Rat& v, const UniSeries& a);
UniSeries u_pow(const UniSeries& a, int p);
// 1/(1-a) for a with zero constant term.
UniSeries u_geom_inv(const UniSeries& a);
const Rat& u_coeff(const UniSeries& a, int n);
bool operator==(const UniSeries& a, const UniSeries& b);

inline UniSeries operator+(const UniSeries& a, const UniSeries& b) { return u_add(a, b); }
inline UniSeries operator-(const UniSeries& a, const UniSeries& b) { return u_sub(a, b); }
inline UniSeries operator*(const UniSeries& a, const UniSeries& b) { return u_mul(a, b); }

}  // namespace bicensus

#endif

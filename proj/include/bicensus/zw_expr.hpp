#ifndef BICENSUS_ZW_EXPR_HPP
#define BICENSUS_ZW_EXPR_HPP

#include <vector>

#include "bicensus/bi_series.hpp"
#include "bicensus/uni_series.hpp"

namespace bicensus {

// One summand p(w) * z^j / (1-w)^m with a polynomial numerator in w.
struct ZWTerm {
  int z_pow = 0;
  int inv_pow = 0;            // power of 1/(1-w)
  std::vector<Rat> numer;     // numer[i] multiplies w^i
};

// Finite sum of ZWTerms; the shape every closed form f_k takes.
struct RationalZWExpr {
  std::vector<ZWTerm> terms;
};

// Substitutes bivariate series for z and w.  W must have zero constant term.
BiSeries eval_zw(const RationalZWExpr& expr, const BiSeries& Z, const BiSeries& W);

// Univariate substitution z -> zs, w -> ws (ws with zero constant term);
// used for the diagonal route f_k(2Y, Y^2).
UniSeries eval_zw_uni(const RationalZWExpr& expr, const UniSeries& zs, const UniSeries& ws);

// Largest z-degree appearing with a nonzero numerator.
int zw_z_degree(const RationalZWExpr& expr);
// Smallest w-power dividing every nonzero numerator polynomial.
int zw_min_w_power(const RationalZWExpr& expr);
// Largest denominator exponent.
int zw_max_inv_pow(const RationalZWExpr& expr);

}  // namespace bicensus

#endif

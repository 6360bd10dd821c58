#include "bicensus/zw_expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace bicensus {

BiSeries eval_zw(const RationalZWExpr& expr, const BiSeries& Z, const BiSeries& W) {
  if (!W.has_zero_const()) throw std::invalid_argument("eval_zw: W has nonzero constant term");
  int tr = std::min(Z.trunc_r(), W.trunc_r());
  int ts = std::min(Z.trunc_s(), W.trunc_s());
  BiSeries inv = geom_inv(W.truncated(tr, ts));
  BiSeries acc(tr, ts);
  for (const ZWTerm& t : expr.terms) {
    BiSeries term = BiSeries::one(tr, ts);
    BiSeries numer(tr, ts);
    BiSeries wpow = BiSeries::one(tr, ts);
    for (size_t i = 0; i < t.numer.size(); ++i) {
      if (t.numer[i] != 0) numer = add(numer, scale(t.numer[i], wpow));
      if (i + 1 < t.numer.size()) wpow = mul(wpow, W);
    }
    term = numer;
    for (int i = 0; i < t.z_pow; ++i) term = mul(term, Z);
    for (int i = 0; i < t.inv_pow; ++i) term = mul(term, inv);
    acc = add(acc, term);
  }
  return acc;
}

UniSeries eval_zw_uni(const RationalZWExpr& expr, const UniSeries& zs, const UniSeries& ws) {
  if (!ws.has_zero_const())
    throw std::invalid_argument("eval_zw_uni: w-series has nonzero constant term");
  int tn = std::min(zs.trunc_n(), ws.trunc_n());
  UniSeries inv = u_geom_inv(ws.truncated(tn));
  UniSeries acc(tn);
  for (const ZWTerm& t : expr.terms) {
    UniSeries numer(tn);
    UniSeries wpow = UniSeries::one(tn);
    for (size_t i = 0; i < t.numer.size(); ++i) {
      if (t.numer[i] != 0) numer = u_add(numer, u_scale(t.numer[i], wpow));
      if (i + 1 < t.numer.size()) wpow = u_mul(wpow, ws);
    }
    UniSeries term = numer;
    for (int i = 0; i < t.z_pow; ++i) term = u_mul(term, zs);
    for (int i = 0; i < t.inv_pow; ++i) term = u_mul(term, inv);
    acc = u_add(acc, term);
  }
  return acc;
}

int zw_z_degree(const RationalZWExpr& expr) {
  int d = 0;
  for (const ZWTerm& t : expr.terms) {
    bool nonzero = std::any_of(t.numer.begin(), t.numer.end(), [](const Rat& v) { return v != 0; });
    if (nonzero) d = std::max(d, t.z_pow);
  }
  return d;
}

int zw_min_w_power(const RationalZWExpr& expr) {
  int m = -1;
  for (const ZWTerm& t : expr.terms) {
    int low = -1;
    for (size_t i = 0; i < t.numer.size(); ++i)
      if (t.numer[i] != 0) { low = static_cast<int>(i); break; }
    if (low < 0) continue;
    m = (m < 0) ? low : std::min(m, low);
  }
  return m < 0 ? 0 : m;
}

int zw_max_inv_pow(const RationalZWExpr& expr) {
  int m = 0;
  for (const ZWTerm& t : expr.terms) m = std::max(m, t.inv_pow);
  return m;
}

}  // namespace bicensus

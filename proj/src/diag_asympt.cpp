#include "bicensus/diag_asympt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bicensus/gf.hpp"
#include "bicensus/oracle.hpp"
#include "bicensus/zw_expr.hpp"

namespace bicensus {

UniSeries y_series(int trunc) {
  UniSeries y(trunc);
  for (int n = 1; n <= trunc; ++n) {
    Rat c(int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 1)),
          factorial(n));
    c.canonicalize();
    y.set_coeff(n, c);
  }
  return y;
}

std::vector<CheckLine> w_diag_check(int max_n) {
  std::vector<CheckLine> out;
  for (int n = 2; n <= max_n; ++n) {
    // sum_r C(n,r) r^{n-r-1} (n-r)^{r-1} = 2 n^{n-2}
    Int lhs(0);
    for (int r = 1; r <= n - 1; ++r)
      lhs += binomial(n, r) *
             int_pow(static_cast<unsigned long>(r), static_cast<unsigned long>(n - r - 1)) *
             int_pow(static_cast<unsigned long>(n - r), static_cast<unsigned long>(r - 1));
    Int two_cayley = 2 * int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
    bool lemma_ok = (lhs == two_cayley);

    // w_n from its definition sum_{r+s=n} C(n,r) w(r,s), w(r,s)=r^{s-1}s^{r-1}(r+s-1),
    // against the closed form 2(n-1)n^{n-2}.
    Int wn(0);
    for (int r = 1; r <= n - 1; ++r) {
      int s = n - r;
      wn += binomial(n, r) *
            int_pow(static_cast<unsigned long>(r), static_cast<unsigned long>(s - 1)) *
            int_pow(static_cast<unsigned long>(s), static_cast<unsigned long>(r - 1)) * (n - 1);
    }
    bool cor_ok = (wn == Int(n - 1) * two_cayley);
    std::ostringstream d;
    d << "lemma=" << (lemma_ok ? "ok" : "FAIL") << " w_n=" << (cor_ok ? "ok" : "FAIL");
    out.push_back({n, lemma_ok && cor_ok, d.str()});
  }
  return out;
}

std::vector<Int> w_sequence(int max_n) {
  std::vector<Int> w(max_n + 1, Int(0));
  for (int n = 2; n <= max_n; ++n)
    w[n] = 2 * Int(n - 1) *
           int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2));
  return w;
}

std::vector<std::vector<Int>> w_conv_powers(int max_n, int max_k) {
  std::vector<Int> w = w_sequence(max_n);
  std::vector<std::vector<Int>> conv(max_k + 1, std::vector<Int>(max_n + 1, Int(0)));
  if (max_k >= 1) conv[1] = w;
  for (int k = 1; k < max_k; ++k)
    for (int n = 0; n <= max_n; ++n) {
      Int acc(0);
      for (int r = 2 * k; r <= n - 2; ++r) acc += binomial(n, r) * conv[k][r] * w[n - r];
      conv[k + 1][n] = acc;
    }
  return conv;
}

Rat w_conv_closed(int n, int k) {
  // 2k (2k)! n^{n-2k-1} C(n,2k); the exponent is -1 when n = 2k.
  Int base = 2 * Int(k) * factorial(2 * k) * binomial(n, 2 * k);
  int e = n - 2 * k - 1;
  Rat r;
  if (e >= 0)
    r = Rat(base * int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(e)));
  else
    r = Rat(base, int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(-e)));
  r.canonicalize();
  return r;
}

std::vector<CheckLine> conv_power_check(int max_n, int max_k) {
  auto conv = w_conv_powers(max_n, std::max(max_k, max_n / 2));
  std::vector<CheckLine> out;
  for (int n = 2; n <= max_n; ++n) {
    bool ok = true;
    std::ostringstream d;
    for (int k = 1; k <= std::min(max_k, n / 2); ++k) {
      Rat closed = w_conv_closed(n, k);
      if (Rat(conv[k][n]) != closed) {
        ok = false;
        d << " k=" << k << " mismatch";
      }
    }
    // zero below minimal degree
    for (int k = 1; k <= max_k; ++k)
      if (2 * k > n && k < static_cast<int>(conv.size()) && conv[k][n] != 0) {
        ok = false;
        d << " nonzero below 2k";
      }
    out.push_back({n, ok, ok ? "ok" : d.str()});
  }
  return out;
}

Int nbi1_convolution(int n) {
  auto conv = w_conv_powers(n, n / 2);
  Rat acc(0);
  for (int k = 2; 2 * k <= n; ++k) {
    Rat term(conv[k][n], 2 * k);
    term.canonicalize();
    acc += term;
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw std::runtime_error("nbi1_convolution: non-integer result");
  return acc.get_num();
}

Int nbi1_formula(int n) {
  if (n < 4) throw std::invalid_argument("nbi1_formula: n < 4");
  // sum_k falling(n,2k) n^{n-1-2k}; the last term has exponent -1 for even n.
  Rat acc(0);
  Int falling(1);
  for (int k = 1; 2 * k <= n; ++k) {
    falling *= Int(n - 2 * k + 2) * (n - 2 * k + 1);
    if (k < 2) continue;
    int e = n - 1 - 2 * k;
    Rat term;
    if (e >= 0)
      term = Rat(falling * int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(e)));
    else
      term = Rat(falling, int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(-e)));
    term.canonicalize();
    acc += term;
  }
  acc.canonicalize();
  if (acc.get_den() != 1) throw std::runtime_error("nbi1_formula: non-integer result");
  return acc.get_num();
}

bool abel_check(int n, const Rat& x0, const Rat& y0) {
  if (x0 == 0 || y0 == 0) throw std::invalid_argument("abel_check: zero argument");
  Rat lhs(0);
  for (int r = 0; r <= n; ++r) {
    Rat a = x0 + r;
    Rat b = y0 + (n - r);
    if (a == 0 || b == 0) throw std::invalid_argument("abel_check: pole hit");
    lhs += Rat(binomial(n, r)) * rat_pow(a, r - 1) * rat_pow(b, n - r - 1);
  }
  Rat rhs = (rat_pow(x0, -1) + rat_pow(y0, -1)) * rat_pow(x0 + y0 + n, n - 1);
  lhs.canonicalize();
  rhs.canonicalize();
  return lhs == rhs;
}

TreePolyTable tree_polys(int p, int max_n) {
  if (p < 1) throw std::invalid_argument("tree_polys: p < 1");
  UniSeries s = u_pow(u_geom_inv(y_series(max_n)), p);
  TreePolyTable t;
  t.p = p;
  t.t.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) t.t.push_back(s.count(n));
  return t;
}

namespace {

// (Y^2 - 3Y - 3)/12 - 11/(64(1+Y)) + 1/(32(1+Y)^2)
//  + 143/(192(1-Y)) - 11/(24(1-Y)^2) + 5/(48(1-Y)^3)
UniSeries f2_pf_series(const UniSeries& Y) {
  int trunc = Y.trunc_n();
  UniSeries Y2 = u_mul(Y, Y);
  UniSeries invm = u_geom_inv(Y);                    // 1/(1-Y)
  UniSeries invp = u_geom_inv(u_scale(Rat(-1), Y));  // 1/(1+Y)
  UniSeries invm2 = u_mul(invm, invm), invm3 = u_mul(invm2, invm);
  UniSeries invp2 = u_mul(invp, invp);
  UniSeries pf =
      u_scale(Rat(1, 12), u_add(u_sub(Y2, u_scale(Rat(3), Y)),
                                u_scale(Rat(-3), UniSeries::one(trunc))));
  pf = u_add(pf, u_scale(Rat(-11, 64), invp));
  pf = u_add(pf, u_scale(Rat(1, 32), invp2));
  pf = u_add(pf, u_scale(Rat(143, 192), invm));
  pf = u_add(pf, u_scale(Rat(-11, 24), invm2));
  pf = u_add(pf, u_scale(Rat(5, 48), invm3));
  return pf;
}

}  // namespace

F2DiagonalForms f2_diagonal_forms(int trunc) {
  UniSeries Y = y_series(trunc);
  UniSeries Y2 = u_mul(Y, Y);

  F2DiagonalForms out;
  out.composed = eval_zw_uni(f2_expr(), u_scale(Rat(2), Y), Y2);

  UniSeries invm = u_geom_inv(Y);                 // 1/(1-Y)
  UniSeries invp = u_geom_inv(u_scale(Rat(-1), Y));  // 1/(1+Y)
  UniSeries invm3 = u_mul(u_mul(invm, invm), invm);
  UniSeries invp2 = u_mul(invp, invp);

  // Y^5 (2 + 4Y - Y^2) / (12 (1-Y)^3 (1+Y)^2)
  UniSeries numer = u_mul(u_pow(Y, 5),
                          u_add(u_add(u_scale(Rat(2), UniSeries::one(trunc)),
                                      u_scale(Rat(4), Y)),
                                u_scale(Rat(-1), Y2)));
  out.single_rational = u_scale(Rat(1, 12), u_mul(numer, u_mul(invm3, invp2)));

  out.partial_fraction = f2_pf_series(Y);
  return out;
}

Int nbi2_exact(int n) { return f2_pf_series(y_series(n)).count(n); }

Int nbik_diagonal_exact(int n, int k) {
  if (k == 2) return nbi2_exact(n);
  if (k != 3 && k != 4) throw std::invalid_argument("nbik_diagonal_exact: k must be 2..4");
  UniSeries Y = y_series(n);
  const RationalZWExpr expr = (k == 3) ? f3_expr() : f4_expr();
  return eval_zw_uni(expr, u_scale(Rat(2), Y), u_mul(Y, Y)).count(n);
}

std::vector<DiagReport> asymptotic_report(int k, const std::vector<int>& n_list) {
  std::vector<DiagReport> out;
  const double pi = std::numbers::pi;
  for (int n : n_list) {
    DiagReport rep;
    rep.n = n;
    rep.k = k;
    double logn = std::log(static_cast<double>(n));
    if (k == 1) {
      Int exact = nbi1_formula(n);
      rep.exact_decimal = exact.get_str();
      rep.predicted_log = 0.5 * std::log(pi / 8.0) + (n - 0.5) * logn;
      rep.ratio = std::exp(log_abs(exact) - rep.predicted_log);
    } else if (k == 2) {
      Int exact = nbi2_exact(n);
      rep.exact_decimal = exact.get_str();
      rep.predicted_log = std::log(5.0 / 48.0) + (n + 1.0) * logn;
      rep.ratio = std::exp(log_abs(exact) - rep.predicted_log);
      // residual (exact - (5/48) n^{n+1}) / n^{n+1/2}
      Rat resid = Rat(exact) - Rat(5, 48) * Rat(int_pow(static_cast<unsigned long>(n),
                                                        static_cast<unsigned long>(n + 1)));
      resid.canonicalize();
      if (resid != 0) {
        double sign = (resid < 0) ? -1.0 : 1.0;
        rep.residual_ratio = sign * std::exp(log_abs(resid) - (n + 0.5) * logn);
      }
    } else {
      throw std::invalid_argument("asymptotic_report: k must be 1 or 2");
    }
    out.push_back(rep);
  }
  return out;
}

Int n_complete(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("n_complete: bad arguments");
  if (k == 1) {
    // Renyi: N(n,1) = (h(n)/n - n^{n-2}(n-1)) / 2
    Int h(0);
    for (int s = 1; s <= n - 1; ++s)
      h += binomial(n, s) *
           int_pow(static_cast<unsigned long>(s), static_cast<unsigned long>(s)) *
           int_pow(static_cast<unsigned long>(n - s), static_cast<unsigned long>(n - s));
    Rat hn(h, n);
    hn.canonicalize();
    Rat v = (hn -
             Rat(int_pow(static_cast<unsigned long>(n), static_cast<unsigned long>(n - 2)) *
                 (n - 1))) /
            2;
    v.canonicalize();
    if (v.get_den() != 1) throw std::runtime_error("n_complete: non-integer value");
    return v.get_num();
  }
  if (k == 2) {
    static const long fixtures[] = {6, 205, 5700, 156555, 4483360, 136368414};
    if (n >= 4 && n <= 9) return Int(fixtures[n - 4]);
    if (n == 10) return Int("4432075200");
    if (n == 11) return Int("154060613850");
    if (n <= 8) return count_complete(n, n + 1);
    throw std::invalid_argument("n_complete: k=2 supported only for n <= 11");
  }
  if (n <= 8) return count_complete(n, n - 1 + k);
  throw std::invalid_argument("n_complete: k >= 3 supported only for n <= 8");
}

std::vector<TrendPoint> thm15_trend_k2() {
  // The reciprocal ratio N(n,2)/N_bi(n,2) falls monotonically on this range
  // while heading for 2^{k-1} = 2.
  std::vector<TrendPoint> out;
  for (int n = 5; n <= 11; ++n) {
    Rat ratio(n_complete(n, 2), nbi2_exact(n));
    ratio.canonicalize();
    out.push_back({n, ratio.get_d()});
  }
  return out;
}

bool thm15_trend_decreasing() {
  auto pts = thm15_trend_k2();
  for (size_t i = 1; i < pts.size(); ++i)
    if (pts[i].ratio_complete_over_bipartite >= pts[i - 1].ratio_complete_over_bipartite)
      return false;
  return true;
}

}  // namespace bicensus

#ifndef BICENSUS_DIAG_ASYMPT_HPP
#define BICENSUS_DIAG_ASYMPT_HPP

#include <string>
#include <vector>

#include "bicensus/rational.hpp"
#include "bicensus/uni_series.hpp"

namespace bicensus {

// EGF of labeled rooted trees: counts n^{n-1}.
UniSeries y_series(int trunc);

struct CheckLine {
  int n;
  bool pass;
  std::string detail;
};

// Identity sum_r C(n,r) r^{n-r-1} (n-r)^{r-1} = 2 n^{n-2} and the diagonal
// coefficient w_n = 2(n-1) n^{n-2}, both checked exactly for 2 <= n <= max_n.
std::vector<CheckLine> w_diag_check(int max_n);

// Exact w_n = 2(n-1)n^{n-2} for 0 <= n <= max_n (w_0 = w_1 = 0).
std::vector<Int> w_sequence(int max_n);

// k-fold binomial convolution powers of (w_n), direct route.
// conv[k][n] = w_n^{*k} for 1 <= k <= max_k.
std::vector<std::vector<Int>> w_conv_powers(int max_n, int max_k);

// Closed form w_n^{*k} = 2k (2k)! n^{n-2k-1} C(n,2k), exact rational.
Rat w_conv_closed(int n, int k);

// Compares direct convolution against the closed form for all n <= max_n,
// k <= min(max_k, n/2), and the unicycle sum against the closed count.
std::vector<CheckLine> conv_power_check(int max_n, int max_k);

// Unicycle diagonal via the convolution sum (1/2) sum_k w_n^{*k} / k.
Int nbi1_convolution(int n);

// Exact N_bi(n,1) = n^{n-1} sum_{2<=k<=n/2} n! / ((n-2k)! n^{2k}), n >= 4.
Int nbi1_formula(int n);

// Abel identity A_n(x,y;-1,-1) = (1/x + 1/y)(x+y+n)^{n-1}, exact.
bool abel_check(int n, const Rat& x0, const Rat& y0);

struct TreePolyTable {
  int p;
  std::vector<Int> t;  // t[n] = t_n(p)
};

// Tree polynomials via 1/(1-Y)^p.
TreePolyTable tree_polys(int p, int max_n);

// The three representations of F_2(x,x): composed f_2(2Y, Y^2), the single
// rational form Y^5(2+4Y-Y^2)/(12(1-Y)^3(1+Y)^2), and the six-term partial
// fraction expansion.  Returns them truncated at `trunc`.
struct F2DiagonalForms {
  UniSeries composed;
  UniSeries single_rational;
  UniSeries partial_fraction;
};
F2DiagonalForms f2_diagonal_forms(int trunc);

// Exact N_bi(n,2) via the univariate partial-fraction route.
Int nbi2_exact(int n);

// Exact N_bi(n,k) via the diagonal of the closed form, k = 2..4.
Int nbik_diagonal_exact(int n, int k);

struct DiagReport {
  int n = 0;
  int k = 0;
  std::string exact_decimal;
  double predicted_log = 0.0;   // natural log of the leading-term prediction
  double ratio = 0.0;           // exact / prediction
  double residual_ratio = 0.0;  // k=2 only: second-order residual vs -(11/24)sqrt(pi/2)
};

std::vector<DiagReport> asymptotic_report(int k, const std::vector<int>& n_list);

// N(n,k) on the complete graph: Renyi's formula for k=1; figure fixtures
// (n <= 11) or brute force (n <= 8) for k = 2; brute force for k >= 3.
Int n_complete(int n, int k);

// Ratio N(n,2)/N_bi(n,2) for n = 5..11; strictly decreasing toward 2^{k-1}.
struct TrendPoint {
  int n;
  double ratio_complete_over_bipartite;
};
std::vector<TrendPoint> thm15_trend_k2();
bool thm15_trend_decreasing();

}  // namespace bicensus

#endif

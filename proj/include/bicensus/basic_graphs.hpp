#ifndef BICENSUS_BASIC_GRAPHS_HPP
#define BICENSUS_BASIC_GRAPHS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bicensus/bi_series.hpp"
#include "bicensus/gf.hpp"
#include "bicensus/uni_series.hpp"

namespace bicensus {

enum class MultigraphClass { FigureEight, Dumbbell, Theta };

// Combinatorial descriptor of one basic graph: cycle/path multiplicities,
// special-point counts, automorphism count.
struct BasicGraphSpec {
  std::string name;
  int a1 = 0, a2 = 0;    // alpha_1 / alpha_2 cycles
  int b1 = 0, b2 = 0;    // beta_1 / beta_2 paths
  int c = 0;             // gamma paths
  int d = 0;             // delta paths
  int e = 0;             // delta edges
  int r_sp = 0, s_sp = 0;
  int v1 = 0, v2 = 0;    // vertex counts of the minimal graph
  long g = 1;            // automorphism count
  int k = 2;
  MultigraphClass mclass = MultigraphClass::FigureEight;

  bool valid() const;
  int n_sp() const { return r_sp + s_sp; }
  // M and L exponents of the diagonal form Y^L / (g (1-Y^2)^M).
  int diag_m() const { return a1 + a2 + b1 + b2 + c + d; }
  int diag_l() const { return diag_m() + r_sp + s_sp + 2 * a1 + 2 * a2 - c + d; }
};

// The nine basic graphs with Betti number 2.
std::vector<BasicGraphSpec> bg2_catalog();

// J_B(x,y) = T_x^{v1} T_y^{v2} / (g (1-W)^{n_sp + k - 1 - e}).
BiSeries j_series(const BasicGraphSpec& spec, const GFWorkspace& ws);

// Diagonal closed form Y^L / (g (1-Y^2)^M) evaluated on a given series Y
// (either the formal variable or the rooted-tree EGF).
UniSeries j_diagonal_series(const BasicGraphSpec& spec, const UniSeries& Y);

// Exact partial fractions of numer(Y) / (1-Y)^M (1+Y)^M.
struct PartialFraction {
  int m = 0;
  std::vector<Rat> a;     // a[i] multiplies 1/(1-Y)^i, index 1..M
  std::vector<Rat> b;     // b[i] multiplies 1/(1+Y)^i, index 1..M
  std::vector<Rat> cpoly; // remaining polynomial in Y

  UniSeries recombine(int trunc) const;
};
PartialFraction partial_fraction(const std::vector<Rat>& numer, int m);

// Partial fractions of the diagonal J_B(x,x).
PartialFraction j_partial_fraction(const BasicGraphSpec& spec);

struct ClassCheck {
  std::string cls;
  bool b_sum_zero = false;
  bool a_sum_matches = false;
  Rat a_sum;
  Rat a_sum_expected;
};

// Per-multigraph-class sums of the top partial-fraction coefficients over the
// M = 3 members of the k = 2 catalog.
std::vector<ClassCheck> section6_checks_k2();

void export_catalog_json(std::ostream& os);

}  // namespace bicensus

#endif

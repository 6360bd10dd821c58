#ifndef BICENSUS_GF_HPP
#define BICENSUS_GF_HPP

#include <optional>
#include <string>
#include <vector>

#include "bicensus/bi_series.hpp"
#include "bicensus/zw_expr.hpp"

namespace bicensus {

// The tree series T and its derived family, all at one truncation.
struct GFWorkspace {
  int trunc;
  BiSeries T;     // spanning-tree EGF
  BiSeries Tx;    // D_x T
  BiSeries Ty;    // D_y T
  BiSeries Z;     // Tx + Ty
  BiSeries W;     // Tx * Ty
  BiSeries Txy;   // D_y D_x T
};

GFWorkspace build_workspace(int trunc);

// Hard-coded closed-form expressions f_2, f_3, f_4 in (z, w).
RationalZWExpr f2_expr();
RationalZWExpr f3_expr();
RationalZWExpr f4_expr();

// F_1 = -(1/2)(log(1-W) + W).
BiSeries f1_closed(const GFWorkspace& ws);
// F_k = f_k(Z, W) for k = 2, 3, 4.
BiSeries f2_closed(const GFWorkspace& ws);
BiSeries f3_closed(const GFWorkspace& ws);
BiSeries f4_closed(const GFWorkspace& ws);
BiSeries fk_closed(const GFWorkspace& ws, int k);

// Solves the linear PDE for F_{k+1} given known = {F_0, ..., F_k}, k >= 1,
// by ascending total degree.  F_1 is not reachable this way (k = 0 makes the
// constant-term divisor vanish); it comes from f1_closed.
BiSeries solve_pde(const GFWorkspace& ws, const std::vector<BiSeries>& known);

struct IdentityResult {
  std::string name;
  bool pass;
  // first failing coefficient, if any
  std::optional<std::pair<int, int>> first_bad;
};

// Checks the operator-algebra identities as exact truncated equalities.
std::vector<IdentityResult> identity_suite(const GFWorkspace& ws);

}  // namespace bicensus

#endif

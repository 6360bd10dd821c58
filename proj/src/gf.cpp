#include "bicensus/gf.hpp"

#include <algorithm>
#include <stdexcept>

#include "bicensus/census.hpp"

namespace bicensus {

GFWorkspace build_workspace(int trunc) {
  if (trunc < 1) throw std::invalid_argument("build_workspace: trunc < 1");
  BiSeries T(trunc, trunc);
  for (int r = 0; r <= trunc; ++r)
    for (int s = 0; s <= trunc; ++s) {
      Int n = spanning_tree_count(r, s);
      if (n == 0) continue;
      Rat c(n, factorial(r) * factorial(s));
      c.canonicalize();
      T.set_coeff(r, s, c);
    }
  GFWorkspace ws;
  ws.trunc = trunc;
  ws.T = T;
  ws.Tx = euler_x(T);
  ws.Ty = euler_y(T);
  ws.Z = add(ws.Tx, ws.Ty);
  ws.W = mul(ws.Tx, ws.Ty);
  ws.Txy = euler_y(ws.Tx);
  return ws;
}

namespace {
std::vector<Rat> poly(std::initializer_list<Rat> cs) {
  std::vector<Rat> v(cs);
  for (Rat& c : v) c.canonicalize();
  return v;
}
}  // namespace

RationalZWExpr f2_expr() {
  // f_2(z,w) = w^2(2+3w)/(24(1-w)^3) z + w^3(6-w)/(12(1-w)^3)
  RationalZWExpr e;
  e.terms.push_back({1, 3, poly({Rat(0), Rat(0), Rat(2, 24), Rat(3, 24)})});
  e.terms.push_back({0, 3, poly({Rat(0), Rat(0), Rat(0), Rat(6, 12), Rat(-1, 12)})});
  return e;
}

RationalZWExpr f3_expr() {
  RationalZWExpr e;
  // w^3(5+41w-23w^2+8w^3-w^4)/(24(1-w)^6)
  e.terms.push_back({0, 6, poly({Rat(0), Rat(0), Rat(0), Rat(5, 24), Rat(41, 24),
                                 Rat(-23, 24), Rat(8, 24), Rat(-1, 24)})});
  // w^3(32+34w-9w^2+3w^3)/(48(1-w)^6) z
  e.terms.push_back({1, 6, poly({Rat(0), Rat(0), Rat(0), Rat(32, 48), Rat(34, 48),
                                 Rat(-9, 48), Rat(3, 48)})});
  // w^2(1+8w+6w^2)/(48(1-w)^6) z^2
  e.terms.push_back({2, 6, poly({Rat(0), Rat(0), Rat(1, 48), Rat(8, 48), Rat(6, 48)})});
  return e;
}

RationalZWExpr f4_expr() {
  RationalZWExpr e;
  // w^3(80+7680w+22820w^2-15356w^3+9889w^4-3746w^5+809w^6-76w^7)/(2880(1-w)^9)
  e.terms.push_back({0, 9, poly({Rat(0), Rat(0), Rat(0), Rat(80, 2880), Rat(7680, 2880),
                                 Rat(22820, 2880), Rat(-15356, 2880), Rat(9889, 2880),
                                 Rat(-3746, 2880), Rat(809, 2880), Rat(-76, 2880)})});
  // w^3(2088+35988w+30468w^2-6617w^3+5568w^4-1425w^5+230w^6)/(5760(1-w)^9) z
  e.terms.push_back({1, 9, poly({Rat(0), Rat(0), Rat(0), Rat(2088, 5760), Rat(35988, 5760),
                                 Rat(30468, 5760), Rat(-6617, 5760), Rat(5568, 5760),
                                 Rat(-1425, 5760), Rat(230, 5760)})});
  // w^3(312+1692w+1186w^2+64w^3+61w^4)/(576(1-w)^9) z^2
  e.terms.push_back({2, 9, poly({Rat(0), Rat(0), Rat(0), Rat(312, 576), Rat(1692, 576),
                                 Rat(1186, 576), Rat(64, 576), Rat(61, 576)})});
  // w^2(24+704w+2624w^2+1919w^3+254w^4)/(5760(1-w)^9) z^3
  e.terms.push_back({3, 9, poly({Rat(0), Rat(0), Rat(24, 5760), Rat(704, 5760),
                                 Rat(2624, 5760), Rat(1919, 5760), Rat(254, 5760)})});
  return e;
}

BiSeries f1_closed(const GFWorkspace& ws) {
  return scale(Rat(-1, 2), add(log_one_minus(ws.W), ws.W));
}

BiSeries f2_closed(const GFWorkspace& ws) { return eval_zw(f2_expr(), ws.Z, ws.W); }
BiSeries f3_closed(const GFWorkspace& ws) { return eval_zw(f3_expr(), ws.Z, ws.W); }
BiSeries f4_closed(const GFWorkspace& ws) { return eval_zw(f4_expr(), ws.Z, ws.W); }

BiSeries fk_closed(const GFWorkspace& ws, int k) {
  switch (k) {
    case 1: return f1_closed(ws);
    case 2: return f2_closed(ws);
    case 3: return f3_closed(ws);
    case 4: return f4_closed(ws);
    default: throw std::invalid_argument("fk_closed: no closed form for this k");
  }
}

BiSeries solve_pde(const GFWorkspace& ws, const std::vector<BiSeries>& known) {
  if (known.size() < 2)
    throw std::invalid_argument("solve_pde: need F_0..F_k with k >= 1");
  int k = static_cast<int>(known.size()) - 1;
  int t = ws.trunc;

  // RHS = (D_x D_y - D_x - D_y + 1 - k) F_k + sum_{l=1}^{k} D_x F_l * D_y F_{k+1-l}
  const BiSeries& Fk = known[k];
  BiSeries rhs = add(sub(euler_x(euler_y(Fk)), add(euler_x(Fk), euler_y(Fk))),
                     scale(Rat(1 - k), Fk));
  for (int l = 1; l <= k; ++l)
    rhs = add(rhs, mul(euler_x(known[l]), euler_y(known[k + 1 - l])));

  // L_k F = (1-T_y)D_x F + (1-T_x)D_y F + k F.  Rearranged per coefficient:
  // (r+s+k) c[r][s] = rhs[r][s] + (T_y D_x F + T_x D_y F)[r][s],
  // where the convolutions only touch strictly lower total degree.
  BiSeries F(t, t);
  for (int n = 0; n <= 2 * t; ++n) {
    for (int r = std::max(0, n - t); r <= std::min(n, t); ++r) {
      int s = n - r;
      Rat acc = rhs.coeff(r, s);
      for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= s; ++j) {
          if (i + j == 0) continue;
          int p = r - i, q = s - j;
          if (ws.Ty.coeff(i, j) != 0 && p > 0)
            acc += ws.Ty.coeff(i, j) * Rat(p) * F.coeff(p, q);
          if (ws.Tx.coeff(i, j) != 0 && q > 0)
            acc += ws.Tx.coeff(i, j) * Rat(q) * F.coeff(p, q);
        }
      if (n + k == 0) {
        if (acc != 0) throw std::runtime_error("solve_pde: inconsistent constant term");
        continue;
      }
      F.set_coeff(r, s, acc / Rat(n + k));
    }
  }
  // Pure powers of x or y cannot occur in any F_{k+1}, k >= 1.
  for (int i = 0; i <= t; ++i)
    if ((i > 0 && F.coeff(i, 0) != 0) || F.coeff(0, i) != 0)
      throw std::runtime_error("solve_pde: nonzero pure-x or pure-y coefficient");
  return F;
}

namespace {

IdentityResult check_eq(const std::string& name, const BiSeries& lhs, const BiSeries& rhs) {
  int tr = std::min(lhs.trunc_r(), rhs.trunc_r());
  int ts = std::min(lhs.trunc_s(), rhs.trunc_s());
  for (int r = 0; r <= tr; ++r)
    for (int s = 0; s <= ts; ++s)
      if (lhs.coeff(r, s) != rhs.coeff(r, s))
        return {name, false, std::make_pair(r, s)};
  return {name, true, std::nullopt};
}

BiSeries apply_l0(const GFWorkspace& ws, const BiSeries& f) {
  BiSeries one = BiSeries::one(ws.trunc, ws.trunc);
  return add(mul(sub(one, ws.Ty), euler_x(f)), mul(sub(one, ws.Tx), euler_y(f)));
}

}  // namespace

std::vector<IdentityResult> identity_suite(const GFWorkspace& ws) {
  std::vector<IdentityResult> out;
  int t = ws.trunc;
  BiSeries one = BiSeries::one(t, t);
  BiSeries x = BiSeries::monomial(1, 0, Rat(1), t, t);
  BiSeries y = BiSeries::monomial(0, 1, Rat(1), t, t);

  const BiSeries& Tx = ws.Tx;
  const BiSeries& Ty = ws.Ty;
  const BiSeries& Z = ws.Z;
  const BiSeries& W = ws.W;
  BiSeries Txx = euler_x(Tx);
  BiSeries Tyy = euler_y(Ty);
  BiSeries Txy = ws.Txy;
  BiSeries inv = geom_inv(W);       // 1/(1-W)
  BiSeries inv2 = mul(inv, inv);

  // T_x T_y = T_x + T_y - T
  out.push_back(check_eq("TxTy = Tx+Ty-T", W, sub(Z, ws.T)));
  // T_xx = T_x (T_xy + 1)
  out.push_back(check_eq("Txx = Tx(Txy+1)", Txx, mul(Tx, add(Txy, one))));
  // T_xy = T_yx = T_x T_yy = T_y T_xx
  out.push_back(check_eq("Txy = Tyx", Txy, euler_x(Ty)));
  out.push_back(check_eq("Txy = Tx Tyy", Txy, mul(Tx, Tyy)));
  out.push_back(check_eq("Txy = Ty Txx", Txy, mul(Ty, Txx)));
  // T_yy = T_y (T_xy + 1)
  out.push_back(check_eq("Tyy = Ty(Txy+1)", Tyy, mul(Ty, add(Txy, one))));
  // T_xy = W/(1-W)
  out.push_back(check_eq("Txy = W/(1-W)", Txy, mul(W, inv)));
  // functional equations T_x = x e^{T_y}, T_y = y e^{T_x}
  out.push_back(check_eq("Tx = x exp(Ty)", Tx, mul(x, exp_zero_const(Ty))));
  out.push_back(check_eq("Ty = y exp(Tx)", Ty, mul(y, exp_zero_const(Tx))));
  // L_0 specializations
  out.push_back(check_eq("L0 Z = Z", apply_l0(ws, Z), Z));
  out.push_back(check_eq("L0 W = 2W", apply_l0(ws, W), scale(Rat(2), W)));

  BiSeries Zx = euler_x(Z), Zy = euler_y(Z), Zxy = euler_y(Zx);
  BiSeries Wx = euler_x(W), Wy = euler_y(W), Wxy = euler_y(Wx);

  // Z_x = (W+T_x)/(1-W) and mirror, Z_xy = (2+Z)/(1-W)^2 T_xy
  out.push_back(check_eq("Zx = (W+Tx)/(1-W)", Zx, mul(add(W, Tx), inv)));
  out.push_back(check_eq("Zy = (W+Ty)/(1-W)", Zy, mul(add(W, Ty), inv)));
  out.push_back(check_eq("Zxy = (2+Z)Txy/(1-W)^2", Zxy,
                         mul(mul(add(scale(Rat(2), one), Z), Txy), inv2)));
  // Z_x + Z_y = (Z+2W)/(1-W), Z_x Z_y = W(Z+W+1)/(1-W)^2
  out.push_back(check_eq("Zx+Zy = (Z+2W)/(1-W)", add(Zx, Zy),
                         mul(add(Z, scale(Rat(2), W)), inv)));
  out.push_back(check_eq("Zx Zy = W(Z+W+1)/(1-W)^2", mul(Zx, Zy),
                         mul(mul(W, add(add(Z, W), one)), inv2)));
  // W_x = (1+T_x)T_xy and mirror
  out.push_back(check_eq("Wx = (1+Tx)Txy", Wx, mul(add(one, Tx), Txy)));
  out.push_back(check_eq("Wy = (1+Ty)Txy", Wy, mul(add(one, Ty), Txy)));
  // W_xy = T_xy^2 + (1+Z+W)/(1-W)^2 T_xy
  out.push_back(check_eq("Wxy = Txy^2 + (1+Z+W)Txy/(1-W)^2", Wxy,
                         add(mul(Txy, Txy), mul(mul(add(add(one, Z), W), Txy), inv2))));
  // W_x + W_y = W(Z+2)/(1-W), W_x W_y = W^2(Z+W+1)/(1-W)^2
  out.push_back(check_eq("Wx+Wy = W(Z+2)/(1-W)", add(Wx, Wy),
                         mul(mul(W, add(Z, scale(Rat(2), one))), inv)));
  out.push_back(check_eq("Wx Wy = W^2(Z+W+1)/(1-W)^2", mul(Wx, Wy),
                         mul(mul(mul(W, W), add(add(Z, W), one)), inv2)));
  // Z_x W_y + Z_y W_x = W(ZW+Z+4W)/(1-W)^2
  out.push_back(check_eq("ZxWy+ZyWx = W(ZW+Z+4W)/(1-W)^2",
                         add(mul(Zx, Wy), mul(Zy, Wx)),
                         mul(mul(W, add(add(mul(Z, W), Z), scale(Rat(4), W))), inv2)));
  return out;
}

}  // namespace bicensus

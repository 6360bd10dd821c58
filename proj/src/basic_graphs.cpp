#include "bicensus/basic_graphs.hpp"

#include <ostream>
#include <stdexcept>

namespace bicensus {

bool BasicGraphSpec::valid() const {
  if (g < 1 || k < 2) return false;
  if (r_sp + s_sp > 2 * (k - 1)) return false;
  if (a1 + a2 + b1 + b2 + c + d + e != r_sp + s_sp + k - 1) return false;
  if (a1 + a2 + b1 + b2 + c + d + e > 3 * (k - 1)) return false;
  if (v1 != r_sp + a1 + 2 * a2 + b2 + d) return false;
  if (v2 != s_sp + 2 * a1 + a2 + b1 + d) return false;
  return true;
}

std::vector<BasicGraphSpec> bg2_catalog() {
  std::vector<BasicGraphSpec> cat;
  // Fields: name, a1,a2,b1,b2,c,d,e, r_sp,s_sp, v1,v2, g, k, class.
  cat.push_back({"two alpha1-cycles", 2, 0, 0, 0, 0, 0, 0, 1, 0, 3, 4, 8, 2,
                 MultigraphClass::FigureEight});
  cat.push_back({"two alpha2-cycles", 0, 2, 0, 0, 0, 0, 0, 0, 1, 4, 3, 8, 2,
                 MultigraphClass::FigureEight});
  cat.push_back({"two alpha1-cycles + beta1-path", 2, 0, 1, 0, 0, 0, 0, 2, 0, 4, 5, 8, 2,
                 MultigraphClass::Dumbbell});
  cat.push_back({"three beta1-paths", 0, 0, 3, 0, 0, 0, 0, 2, 0, 2, 3, 12, 2,
                 MultigraphClass::Theta});
  cat.push_back({"two alpha2-cycles + beta2-path", 0, 2, 0, 1, 0, 0, 0, 0, 2, 5, 4, 8, 2,
                 MultigraphClass::Dumbbell});
  cat.push_back({"three beta2-paths", 0, 0, 0, 3, 0, 0, 0, 0, 2, 3, 2, 12, 2,
                 MultigraphClass::Theta});
  cat.push_back({"three delta-paths", 0, 0, 0, 0, 0, 3, 0, 1, 1, 4, 4, 6, 2,
                 MultigraphClass::Theta});
  cat.push_back({"two delta-paths + delta-edge", 0, 0, 0, 0, 0, 2, 1, 1, 1, 3, 3, 2, 2,
                 MultigraphClass::Theta});
  cat.push_back({"alpha1-cycle + alpha2-cycle + gamma-path", 1, 1, 0, 0, 1, 0, 0, 1, 1, 4, 4,
                 4, 2, MultigraphClass::Dumbbell});
  return cat;
}

BiSeries j_series(const BasicGraphSpec& spec, const GFWorkspace& ws) {
  if (!spec.valid()) throw std::invalid_argument("j_series: invalid spec");
  BiSeries term = mul(bi_pow(ws.Tx, spec.v1), bi_pow(ws.Ty, spec.v2));
  BiSeries inv = geom_inv(ws.W);
  int denom_pow = spec.n_sp() + spec.k - 1 - spec.e;
  for (int i = 0; i < denom_pow; ++i) term = mul(term, inv);
  return scale(Rat(1, spec.g), term);
}

UniSeries j_diagonal_series(const BasicGraphSpec& spec, const UniSeries& Y) {
  if (!spec.valid()) throw std::invalid_argument("j_diagonal_series: invalid spec");
  UniSeries r = u_pow(Y, spec.diag_l());
  r = u_mul(r, u_pow(u_geom_inv(u_mul(Y, Y)), spec.diag_m()));
  return u_scale(Rat(1, spec.g), r);
}

PartialFraction partial_fraction(const std::vector<Rat>& numer, int m) {
  if (m < 0) throw std::invalid_argument("partial_fraction: negative order");
  // Peel poles at Y = 1 and Y = -1 one order at a time: evaluate the running
  // numerator at the pole, subtract the matched simple term, divide the
  // difference exactly.
  PartialFraction pf;
  pf.m = m;
  pf.a.assign(m + 1, Rat(0));
  pf.b.assign(m + 1, Rat(0));

  std::vector<Rat> p = numer;  // running numerator over (1-Y)^mm (1+Y)^mp
  auto eval_at = [](const std::vector<Rat>& poly, int y) {
    Rat v(0), ypow(1);
    for (const Rat& c : poly) {
      v += c * ypow;
      ypow *= y;
    }
    return v;
  };
  // divide poly by (1 - Y); requires poly(1) == 0.
  // poly(Y) = (1 - Y) q(Y); poly_0 = q_0, poly_i = q_i - q_{i-1}.
  auto div_one_minus = [](std::vector<Rat> poly) {
    std::vector<Rat> q;
    if (poly.empty()) return q;
    q.assign(poly.size() - 1, Rat(0));
    if (!q.empty()) {
      q[0] = poly[0];
      for (size_t i = 1; i + 1 <= q.size(); ++i) q[i] = poly[i] + q[i - 1];
    }
    return q;
  };
  auto div_one_plus = [](std::vector<Rat> poly) {
    // poly(Y) = (1 + Y) q(Y); poly_0 = q_0, poly_i = q_i + q_{i-1}.
    std::vector<Rat> q;
    if (poly.empty()) return q;
    q.assign(poly.size() - 1, Rat(0));
    if (!q.empty()) {
      q[0] = poly[0];
      for (size_t i = 1; i + 1 <= q.size(); ++i) q[i] = poly[i] - q[i - 1];
    }
    return q;
  };

  int mm = m, mp = m;
  for (int i = m; i >= 1; --i) {
    // current denominator (1-Y)^mm (1+Y)^mp with mm == mp == i
    if (p.size() < static_cast<size_t>(mp + 1)) p.resize(mp + 1, Rat(0));
    Rat a_i = eval_at(p, 1) / rat_pow(Rat(2), mp);
    a_i.canonicalize();
    pf.a[i] = a_i;
    // subtract a_i/(1-Y)^i  ==>  numerator becomes p - a_i (1+Y)^mp
    std::vector<Rat> sub(p.size(), Rat(0));
    {
      // (1+Y)^mp coefficients
      for (int j = 0; j <= mp && j < static_cast<int>(sub.size()); ++j)
        sub[j] = a_i * Rat(binomial(mp, j));
    }
    std::vector<Rat> pm(p.size(), Rat(0));
    for (size_t j = 0; j < p.size(); ++j) pm[j] = p[j] - sub[j];
    pm = div_one_minus(pm);
    --mm;

    if (pm.size() < static_cast<size_t>(mm + 1)) pm.resize(mm + 1, Rat(0));
    Rat b_i = eval_at(pm, -1) / rat_pow(Rat(2), mm);
    b_i.canonicalize();
    pf.b[i] = b_i;
    std::vector<Rat> sub2(pm.size(), Rat(0));
    for (int j = 0; j <= mm && j < static_cast<int>(sub2.size()); ++j) {
      Rat c = b_i * Rat(binomial(mm, j));
      if (j % 2 == 1) c = -c;
      sub2[j] = c;  // b_i (1-Y)^mm
    }
    std::vector<Rat> pp(pm.size(), Rat(0));
    for (size_t j = 0; j < pm.size(); ++j) pp[j] = pm[j] - sub2[j];
    p = div_one_plus(pp);
    --mp;
  }
  // whatever is left is the polynomial part
  pf.cpoly = p;
  while (!pf.cpoly.empty() && pf.cpoly.back() == 0) pf.cpoly.pop_back();
  return pf;
}

UniSeries PartialFraction::recombine(int trunc) const {
  UniSeries Y(trunc);
  Y.set_coeff(1, Rat(1));
  UniSeries invm = u_geom_inv(Y);
  UniSeries invp = u_geom_inv(u_scale(Rat(-1), Y));
  UniSeries acc(trunc);
  UniSeries pm = UniSeries::one(trunc), pp = UniSeries::one(trunc);
  for (int i = 1; i <= m; ++i) {
    pm = u_mul(pm, invm);
    pp = u_mul(pp, invp);
    if (a[i] != 0) acc = u_add(acc, u_scale(a[i], pm));
    if (b[i] != 0) acc = u_add(acc, u_scale(b[i], pp));
  }
  UniSeries ypow = UniSeries::one(trunc);
  for (size_t j = 0; j < cpoly.size(); ++j) {
    if (cpoly[j] != 0) acc = u_add(acc, u_scale(cpoly[j], ypow));
    if (j + 1 < cpoly.size()) ypow = u_mul(ypow, Y);
  }
  return acc;
}

PartialFraction j_partial_fraction(const BasicGraphSpec& spec) {
  if (!spec.valid()) throw std::invalid_argument("j_partial_fraction: invalid spec");
  int m = spec.diag_m();
  int l = spec.diag_l();
  std::vector<Rat> numer(l + 1, Rat(0));
  numer[l] = Rat(1, spec.g);
  numer[l].canonicalize();
  return partial_fraction(numer, m);
}

std::vector<ClassCheck> section6_checks_k2() {
  auto cat = bg2_catalog();
  std::vector<ClassCheck> out;
  for (MultigraphClass mc : {MultigraphClass::Dumbbell, MultigraphClass::Theta}) {
    ClassCheck chk;
    chk.cls = (mc == MultigraphClass::Dumbbell) ? "dumbbell" : "theta";
    Rat asum(0), bsum(0);
    long g_id = 0;
    for (const auto& spec : cat) {
      if (spec.mclass != mc || spec.diag_m() != 3) continue;
      PartialFraction pf = j_partial_fraction(spec);
      asum += pf.a[3];
      bsum += pf.b[3];
      // class representative with every special point on the V1 side
      if (spec.s_sp == 0) g_id = spec.g;
    }
    chk.b_sum_zero = (bsum == 0);
    chk.a_sum = asum;
    chk.a_sum_expected = (g_id > 0) ? Rat(1, 2 * g_id) : Rat(0);
    chk.a_sum_expected.canonicalize();
    chk.a_sum_matches = (g_id > 0 && asum == chk.a_sum_expected);
    out.push_back(chk);
  }
  return out;
}

void export_catalog_json(std::ostream& os) {
  auto cat = bg2_catalog();
  os << "[";
  for (size_t i = 0; i < cat.size(); ++i) {
    const auto& s = cat[i];
    if (i) os << ',';
    os << "{\"name\":\"" << s.name << "\",\"a1\":" << s.a1 << ",\"a2\":" << s.a2
       << ",\"b1\":" << s.b1 << ",\"b2\":" << s.b2 << ",\"c\":" << s.c << ",\"d\":" << s.d
       << ",\"e\":" << s.e << ",\"r_sp\":" << s.r_sp << ",\"s_sp\":" << s.s_sp
       << ",\"v1\":" << s.v1 << ",\"v2\":" << s.v2 << ",\"g\":" << s.g << ",\"k\":" << s.k
       << ",\"class\":\""
       << (s.mclass == MultigraphClass::FigureEight
               ? "figure_eight"
               : (s.mclass == MultigraphClass::Dumbbell ? "dumbbell" : "theta"))
       << "\",\"M\":" << s.diag_m() << ",\"L\":" << s.diag_l() << "}";
  }
  os << "]";
}

}  // namespace bicensus

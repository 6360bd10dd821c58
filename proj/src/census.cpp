#include "bicensus/census.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bicensus {

Int spanning_tree_count(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("spanning_tree_count: negative size");
  if (r == 0 && s == 0) return 0;
  if (r == 0) return s == 1 ? 1 : 0;
  if (s == 0) return r == 1 ? 1 : 0;
  return int_pow(static_cast<unsigned long>(r), static_cast<unsigned long>(s - 1)) *
         int_pow(static_cast<unsigned long>(s), static_cast<unsigned long>(r - 1));
}

Int& CountTable::slot(int r, int s, int k) {
  return values_[(static_cast<size_t>(r) * (max_n_ + 1) + s) * (max_k_ + 1) + k];
}

const Int& CountTable::slot(int r, int s, int k) const {
  return values_[(static_cast<size_t>(r) * (max_n_ + 1) + s) * (max_k_ + 1) + k];
}

const Int& CountTable::at(int r, int s, int k) const {
  if (r < 0 || s < 0 || k < 0 || r + s > max_n_ || k > max_k_)
    throw std::out_of_range("CountTable::at: index out of range");
  return slot(r, s, k);
}

CountTable::CountTable(int max_n, int max_k) : max_n_(max_n), max_k_(max_k) {
  if (max_n < 1 || max_k < 0) throw std::invalid_argument("CountTable: bad bounds");
  values_.assign(static_cast<size_t>(max_n + 1) * (max_n + 1) * (max_k + 1), Int(0));

  // Seed: the two one-vertex graphs.  Everything else is recovered by the
  // edge-adding recurrence, including the spanning-tree closed form.
  slot(1, 0, 0) = 1;
  slot(0, 1, 0) = 1;

  // N at a given edge count; zero outside the stored k-range or support.
  auto get = [&](int r, int s, int q) -> Int {
    if (r < 0 || s < 0 || r + s > max_n_ || r + s == 0) return 0;
    int k = q - r - s + 1;
    if (k < 0 || k > max_k_) return 0;
    return slot(r, s, k);
  };

  std::vector<std::vector<Int>> bin(max_n + 1, std::vector<Int>(max_n + 1, Int(0)));
  for (int n = 0; n <= max_n; ++n)
    for (int j = 0; j <= n; ++j) bin[n][j] = binomial(n, j);

  int q_top = max_n - 1 + max_k;  // largest edge count any stored entry has
  for (int q = 0; q < q_top; ++q) {
    for (int r = 0; r <= max_n; ++r) {
      for (int s = 0; s + r <= max_n; ++s) {
        if (r + s == 0) continue;
        int k_new = q - r - s + 2;
        if (k_new < 0 || k_new > max_k_) continue;
        // Q(r,s,q), doubled to keep the arithmetic integral.
        Int two_q(0);
        for (int r1 = 0; r1 <= r; ++r1) {
          for (int s1 = 0; s1 <= s; ++s1) {
            long weight = static_cast<long>(r - r1) * s1 + static_cast<long>(r1) * (s - s1);
            if (weight == 0) continue;
            int r2 = r - r1, s2 = s - s1;
            Int factor = bin[r][r1] * bin[s][s1] * weight;
            int t_lo = std::max(0, r1 + s1 - 1);
            int t_hi = std::min(q, r1 + s1 - 1 + max_k_);
            for (int t = t_lo; t <= t_hi; ++t) {
              Int a = get(r1, s1, t);
              if (a == 0) continue;
              Int b = get(r2, s2, q - t);
              if (b == 0) continue;
              two_q += factor * a * b;
            }
          }
        }
        Int rhs = 2 * (Int(r) * s - q) * get(r, s, q) + two_q;
        Int div = 2 * (q + 1);
        Int val, rem;
        mpz_fdiv_qr(val.get_mpz_t(), rem.get_mpz_t(), rhs.get_mpz_t(), div.get_mpz_t());
        if (rem != 0)
          throw std::runtime_error("CountTable: recurrence step not divisible by q+1");
        if (q + 1 < r + s - 1 || Int(q + 1) > Int(r) * s) {
          if (val != 0) throw std::runtime_error("CountTable: nonzero count outside support");
          continue;
        }
        slot(r, s, k_new) = val;
      }
    }
  }
}

Int CountTable::diagonal_count(int n, int k) const {
  if (n < 0 || n > max_n_ || k < 0 || k > max_k_)
    throw std::out_of_range("CountTable::diagonal_count: index out of range");
  Int acc(0);
  for (int r = 0; r <= n; ++r) acc += binomial(n, r) * slot(r, n - r, k);
  return acc;
}

BiSeries CountTable::to_biseries(int k, int trunc) const {
  if (trunc > max_n_) throw std::out_of_range("CountTable::to_biseries: trunc > max_n");
  BiSeries f(trunc, trunc);
  for (int r = 0; r <= trunc; ++r)
    for (int s = 0; s <= trunc && r + s <= max_n_; ++s) {
      if (slot(r, s, k) == 0) continue;
      Rat c(slot(r, s, k), factorial(r) * factorial(s));
      c.canonicalize();
      f.set_coeff(r, s, c);
    }
  return f;
}

void CountTable::export_csv(std::ostream& os) const {
  os << "r,s,k,count\n";
  for (int r = 0; r <= max_n_; ++r)
    for (int s = 0; s + r <= max_n_; ++s)
      for (int k = 0; k <= max_k_; ++k)
        os << r << ',' << s << ',' << k << ',' << slot(r, s, k).get_str() << '\n';
}

void CountTable::export_json(std::ostream& os) const {
  os << "{\"max_n\":" << max_n_ << ",\"max_k\":" << max_k_ << ",\"entries\":[";
  bool first = true;
  for (int r = 0; r <= max_n_; ++r)
    for (int s = 0; s + r <= max_n_; ++s)
      for (int k = 0; k <= max_k_; ++k) {
        if (!first) os << ',';
        first = false;
        os << "{\"r\":" << r << ",\"s\":" << s << ",\"k\":" << k
           << ",\"count\":\"" << slot(r, s, k).get_str() << "\"}";
      }
  os << "]}";
}

}  // namespace bicensus

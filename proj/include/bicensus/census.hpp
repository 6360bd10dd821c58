#ifndef BICENSUS_CENSUS_HPP
#define BICENSUS_CENSUS_HPP

#include <iosfwd>
#include <vector>

#include "bicensus/bi_series.hpp"
#include "bicensus/rational.hpp"

namespace bicensus {

// Number of spanning trees of K_{r,s}: r^{s-1} s^{r-1} with 0^a = [a==0].
Int spanning_tree_count(int r, int s);

// Exact table of connected bipartite (r,s,r+s-1+k)-graph counts, built from
// the edge-count recurrence with only the two one-vertex graphs as seed.
class CountTable {
 public:
  CountTable(int max_n, int max_k);

  int max_n() const { return max_n_; }
  int max_k() const { return max_k_; }

  const Int& at(int r, int s, int k) const;

  // Antidiagonal sum: sum_{r+s=n} C(n,r) * N(r,s,k).
  Int diagonal_count(int n, int k) const;

  // F_k as a series with c[r][s] = N(r,s,k)/(r! s!).
  BiSeries to_biseries(int k, int trunc) const;

  void export_csv(std::ostream& os) const;
  void export_json(std::ostream& os) const;

 private:
  int max_n_, max_k_;
  std::vector<Int> values_;  // dense [r][s][k]
  Int& slot(int r, int s, int k);
  const Int& slot(int r, int s, int k) const;
};

inline CountTable build_table(int max_n, int max_k) { return CountTable(max_n, max_k); }

}  // namespace bicensus

#endif

#ifndef BICENSUS_RATIONAL_HPP
#define BICENSUS_RATIONAL_HPP

#include <gmpxx.h>
#include <cmath>
#include <cstdint>
#include <string>

namespace bicensus {

// Exact coefficient field.  mpq_class arithmetic keeps results canonical
// (lowest terms, positive denominator); values built with the two-argument
// constructor must be canonicalize()d before use.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// x^e for rational x, any integer e (x != 0 when e < 0).
inline Rat rat_pow(const Rat& x, long e) {
  if (e >= 0) {
    Rat r(int_pow(x.get_num(), static_cast<unsigned long>(e)),
          int_pow(x.get_den(), static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  }
  Rat inv(x.get_den(), x.get_num());
  inv.canonicalize();
  return rat_pow(inv, -e);
}

// log(|x|) for a nonzero big integer, without converting x to double.
inline double log_abs(const Int& x) {
  long exp2;
  double d = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(std::abs(d)) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_abs(const Rat& x) {
  return log_abs(x.get_num()) - log_abs(x.get_den());
}

inline std::string to_decimal(const Int& x) { return x.get_str(); }

}  // namespace bicensus

#endif

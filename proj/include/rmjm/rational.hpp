#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rmjm/real.hpp"

namespace rmjm {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  if (k > n) return Int(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Real to_real(const Rational& q, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real to_real(const Int& z, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_z(r.raw(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rmjm

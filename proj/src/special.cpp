#include "rmjm/special.hpp"

#include <stdexcept>

#include "rmjm/quadrature.hpp"

namespace rmjm {
namespace {

// int_0^z ln Gamma(1+t) dt, 0 <= z <= 1; integrand analytic, adaptive GL
Real int_lgamma1p(const Real& z, mpfr_prec_t prec) {
  if (z.is_zero()) return Real(0.0, prec);
  mpfr_prec_t pw = prec + 16;
  Real tol = Real::pow2(-static_cast<long>(prec) - 2, pw);
  Real prev(0.0, pw);
  for (int n = 32;; n *= 2) {
    auto rule = cached_gauss_legendre(n, pw);
    Real acc(0.0, pw);
    for (std::size_t i = 0; i < rule->size(); ++i) {
      Real t = rule->nodes[i] * z;
      acc += rule->weights[i] * lngamma_pos(t + 1L);
    }
    acc *= z;
    if (n > 32 && abs(acc - prev) <= tol * (abs(acc) + 1L)) return acc.round_to(prec);
    if (n > 4096) throw std::runtime_error("log_barnes_g: quadrature failed to settle");
    prev = acc;
  }
}

}  // namespace

Real log_gamma(const Real& x, mpfr_prec_t prec) {
  if (!(x > 0L)) throw std::domain_error("log_gamma: requires x > 0");
  return lngamma_pos(x.round_to(prec + 8)).round_to(prec);
}

Real log_beta(const Real& a, const Real& b, mpfr_prec_t prec) {
  mpfr_prec_t pw = prec + 8;
  return (log_gamma(a, pw) + log_gamma(b, pw) - log_gamma(a + b, pw)).round_to(prec);
}

Real log_barnes_g(const Real& x, mpfr_prec_t prec) {
  if (!(x > 0L)) throw std::domain_error("log_barnes_g: requires x > 0");
  mpfr_prec_t pw = prec + 32;
  Real xv = x.round_to(pw);
  // walk the argument into (1,2] collecting ln G(x+1) = ln Gamma(x) + ln G(x)
  Real shift(0.0, pw);
  while (xv > 2L) {
    xv -= 1L;
    shift += lngamma_pos(xv);
  }
  while (xv <= 1L) {
    shift -= lngamma_pos(xv);
    xv += 1L;
  }
  // xv in (1,2]: with z = xv - 1 in (0,1],
  // ln G(1+z) = z(1-z)/2 + (z/2) ln 2pi + z ln Gamma(z) - int_0^z ln Gamma(t) dt
  // and int_0^z ln Gamma(t) dt = z - z ln z + int_0^z ln Gamma(1+t) dt
  Real z = xv - 1L;
  Real result(0.0, pw);
  if (!z.is_zero()) {
    Real ln2pi = log(2L * Real::pi(pw));
    Real integral = z - z * log(z) + int_lgamma1p(z, pw);
    result = z * (1L - z) / 2L + z / 2L * ln2pi + z * lngamma_pos(z) - integral;
  }
  return (result + shift).round_to(prec);
}

}  // namespace rmjm

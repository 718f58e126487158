#include "oracles.hpp"

#include <stdexcept>

namespace rmjm::oracles {

std::vector<Rational> bernoulli_numbers(int n) {
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
    b[m] = -acc / Rational(m + 1);
  }
  return b;
}

Real stirling_log_gamma(const Real& x, mpfr_prec_t prec, int terms) {
  if (!(x > 0L)) throw std::domain_error("stirling oracle: x > 0");
  mpfr_prec_t pw = prec + 64;
  // shift so the asymptotic series converges to the target tolerance
  Real z = x.round_to(pw);
  Real lnshift(0.0, pw);
  double need = 10.0 + 0.6 * static_cast<double>(prec) / 4.0;  // crude but safe
  while (z.to_double() < need) {
    lnshift += log(z);
    z += 1L;
  }
  static std::vector<Rational> bern = bernoulli_numbers(2 * 220);
  Real half = Real::from_ratio(1, 2, pw);
  Real acc = (z - half) * log(z) - z + half * log(2L * Real::pi(pw));
  Real zpow = z;
  Real z2 = z * z;
  for (int k = 1; k <= terms; ++k) {
    Rational coeff = bern[2 * k] / Rational(Int(2 * k) * Int(2 * k - 1));
    Real term = to_real(coeff, pw) / zpow;
    acc += term;
    zpow *= z2;
    if (abs(term) < Real::pow2(-static_cast<long>(prec) - 16, pw)) break;
  }
  return (acc - lnshift).round_to(prec);
}

Rational det_exact(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  if (sign < 0) det = -det;
  return det;
}

}  // namespace rmjm::oracles

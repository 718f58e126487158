#include "rmjm/fredholm.hpp"

#include <stdexcept>

#include "rmjm/linalg.hpp"

namespace rmjm {

Real fredholm_det(const KernelFn& kernel, const WeightFn& multiplier,
                  const QuadratureRule& rule) {
  std::size_t n = rule.size();
  if (n == 0) return Real(1.0, Real::kMinPrec);
  mpfr_prec_t prec = rule.nodes[0].precision();
  std::vector<Real> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    Real mw = multiplier(rule.nodes[i]) * rule.weights[i];
    if (mw < 0L) throw std::domain_error("fredholm_det: multiplier must be nonnegative");
    s[i] = sqrt(mw);
  }
  MatrixR a = MatrixR::identity(n, prec);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (s[i].is_zero() || s[j].is_zero()) continue;
      Real v = s[i] * kernel(rule.nodes[i], rule.nodes[j]) * s[j];
      a(i, j) -= v;
      if (j != i) a(j, i) -= v;
    }
  }
  return det_ext(a);
}

FredholmResult fredholm_det_adaptive(const KernelFn& kernel, const WeightFn& multiplier,
                                     const std::function<QuadratureRule(int)>& make_rule,
                                     int n0, const Real& tol, int n_max) {
  FredholmResult res;
  Real prev;
  bool have_prev = false;
  for (int n = n0; n <= n_max; n *= 2) {
    QuadratureRule rule = make_rule(n);
    Real d = fredholm_det(kernel, multiplier, rule);
    res.final_order = n;
    if (have_prev) {
      res.last_delta = abs(d - prev);
      if (res.last_delta <= tol) {
        res.value = d;
        res.converged = true;
        return res;
      }
    }
    prev = d;
    have_prev = true;
    res.value = d;
  }
  return res;
}

}  // namespace rmjm

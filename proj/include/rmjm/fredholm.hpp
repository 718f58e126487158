#pragma once

#include <functional>

#include "rmjm/quadrature.hpp"

namespace rmjm {

using KernelFn = std::function<Real(const Real&, const Real&)>;
using WeightFn = std::function<Real(const Real&)>;

// Nystrom approximation of det(I - M^{1/2} K M^{1/2}) on the rule's domain;
// multiplier values must be nonnegative on the nodes
Real fredholm_det(const KernelFn& kernel, const WeightFn& multiplier,
                  const QuadratureRule& rule);

struct FredholmResult {
  Real value;
  bool converged = false;
  Real last_delta;
  int final_order = 0;
};

// order doubling until two successive values agree to tol (relative to 1);
// converged == false flags non-convergence, the best value is still returned
FredholmResult fredholm_det_adaptive(const KernelFn& kernel, const WeightFn& multiplier,
                                     const std::function<QuadratureRule(int)>& make_rule,
                                     int n0, const Real& tol, int n_max = 4096);

}  // namespace rmjm

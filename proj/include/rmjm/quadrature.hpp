#pragma once

#include <memory>
#include <vector>

#include "rmjm/real.hpp"

namespace rmjm {

// Nodes strictly increasing, weights positive. Jacobi/Legendre rules live on
// (0,1); half-line rules carry transformed nodes on (0,inf) with the
// Jacobian folded into the weights.
struct QuadratureRule {
  enum class Kind { GaussJacobi, GaussLegendre, HalfLine };
  Kind kind = Kind::GaussLegendre;
  Real alpha, beta;     // weight x^alpha (1-x)^beta for GaussJacobi
  int transform_power = 1;  // half-line: x = scale*(u/(1-u))^power
  Real transform_scale;
  std::vector<Real> nodes;
  std::vector<Real> weights;

  std::size_t size() const { return nodes.size(); }

  template <typename F>
  Real integrate(F&& f) const {
    Real acc(nodes.empty() ? Real::kMinPrec : nodes[0].precision());
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

// int_0^1 f(x) x^alpha (1-x)^beta dx; requires alpha, beta > -1
QuadratureRule gauss_jacobi_rule(int n, const Real& alpha, const Real& beta,
                                 mpfr_prec_t prec);

// int_0^1 f(x) dx
QuadratureRule gauss_legendre_rule(int n, mpfr_prec_t prec);

// int_0^inf f(x) dx via x = scale*(u/(1-u))^power, Gauss-Legendre in u
QuadratureRule half_line_rule(int n, mpfr_prec_t prec, int power = 1,
                              double scale = 1.0);

// process-wide cache keyed by (kind, n, params, precision)
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(int n, const Real& alpha,
                                                          const Real& beta,
                                                          mpfr_prec_t prec);
std::shared_ptr<const QuadratureRule> cached_gauss_legendre(int n, mpfr_prec_t prec);

}  // namespace rmjm

#pragma once

#include "rmjm/real.hpp"

namespace rmjm {

// ln Gamma(x), x > 0
Real log_gamma(const Real& x, mpfr_prec_t prec);

// ln of the Barnes G-function, x > 0. Satisfies
// log_barnes_g(x+1) = log_gamma(x) + log_barnes_g(x).
Real log_barnes_g(const Real& x, mpfr_prec_t prec);

// ln Beta(a, b), a, b > 0
Real log_beta(const Real& a, const Real& b, mpfr_prec_t prec);

}  // namespace rmjm

#pragma once

#include <utility>
#include <vector>

#include "rmjm/real.hpp"

namespace rmjm {

struct RichardsonResult {
  Real limit;
  Real error_estimate;
};

// Eliminates the listed correction powers p from v(N) = L + sum_p c_p N^{-p};
// entries must have distinct N. The error estimate is the magnitude of the
// final elimination step.
RichardsonResult richardson(const std::vector<std::pair<Real, Real>>& points,
                            const std::vector<double>& exponents);

}  // namespace rmjm

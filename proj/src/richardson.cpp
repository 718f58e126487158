#include "rmjm/richardson.hpp"

#include <stdexcept>

namespace rmjm {

RichardsonResult richardson(const std::vector<std::pair<Real, Real>>& points,
                            const std::vector<double>& exponents) {
  if (points.size() < 2) throw std::invalid_argument("richardson: need >= 2 points");
  if (exponents.empty()) throw std::invalid_argument("richardson: empty exponent list");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("richardson: repeated N");

  mpfr_prec_t prec = points[0].second.precision();
  std::vector<Real> ns, vs;
  for (auto& [n, v] : points) {
    ns.push_back(n.round_to(prec));
    vs.push_back(v);
  }
  std::size_t stages = exponents.size();
  if (points.size() < stages + 1)
    stages = points.size() - 1;  // eliminate what the data supports

  Real prev_stage_last = vs.back();
  for (std::size_t k = 0; k < stages; ++k) {
    Real p(exponents[k], prec);
    std::vector<Real> nn, nv;
    prev_stage_last = vs.back();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      Real a = pow(ns[i], p), b = pow(ns[i + 1], p);
      nv.push_back((b * vs[i + 1] - a * vs[i]) / (b - a));
      nn.push_back(ns[i]);
    }
    vs = std::move(nv);
    ns = std::move(nn);
  }
  RichardsonResult r;
  r.limit = vs.back();
  r.error_estimate = abs(vs.back() - prev_stage_last);
  return r;
}

}  // namespace rmjm

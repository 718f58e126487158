#include "rmjm/schur.hpp"

#include <stdexcept>

namespace rmjm {
namespace {

// enumerate all mu' >= lambda' with mu'/lambda' a horizontal strip of size k
// and mu'_1 <= nmax, invoking fn on each conjugated-back partition
void horizontal_strips(const Partition& lam_conj, unsigned k, unsigned nmax,
                       const std::function<void(Partition&&)>& fn) {
  std::vector<unsigned> lc = lam_conj.parts;
  lc.push_back(0);  // one extra row may appear
  std::vector<unsigned> mu(lc.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == lc.size()) {
      if (left == 0) {
        std::vector<unsigned> m;
        for (unsigned v : mu)
          if (v > 0) m.push_back(v);
        fn(Partition(std::move(m)).conjugate());
      }
      return;
    }
    unsigned lo = lc[i];
    unsigned hi = (i == 0) ? nmax : lc[i - 1];
    if (lo + left < hi) hi = lo + left;  // cannot add more than what remains
    for (unsigned v = lo; v <= hi; ++v) {
      mu[i] = v;
      rec(i + 1, left - (v - lo));
    }
    mu[i] = lo;
  };
  rec(0, k);
}

}  // namespace

SchurExpansion pieri_e_multiply(const SchurExpansion& in, unsigned k) {
  if (k > in.variable_count)
    throw std::invalid_argument("pieri_e_multiply: e-index exceeds variable count");
  if (k == 0) return in;
  SchurExpansion out;
  out.variable_count = in.variable_count;
  for (auto& [lam, coeff] : in.terms) {
    const Rational& c = coeff;
    horizontal_strips(lam.conjugate(), k, in.variable_count,
                      [&](Partition&& mu) { out.add(mu, c); });
  }
  return out;
}

}  // namespace rmjm

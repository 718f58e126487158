#include "rmjm/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "rmjm/special.hpp"

namespace rmjm {
namespace {

// Recurrence coefficients of the monic-orthonormal Jacobi chain for weight
// (1-x)^A (1+x)^B on (-1,1): alpha_k (diagonal) and beta_k (squared
// off-diagonal, beta_0 = total mass).
struct JacobiChain {
  double A, B;
  double alpha(int k) const {
    double s = 2.0 * k + A + B;
    if (k == 0) return (B - A) / (A + B + 2.0);
    return (B * B - A * A) / (s * (s + 2.0));
  }
  double beta(int k) const {
    // k >= 1; the k=1 form has the (1+A+B) factor cancelled (0/0 otherwise
    // when A+B = -1)
    if (k == 1)
      return 4.0 * (1.0 + A) * (1.0 + B) / ((2.0 + A + B) * (2.0 + A + B) * (3.0 + A + B));
    double s = 2.0 * k + A + B;
    return 4.0 * k * (k + A) * (k + B) * (k + A + B) /
           (s * s * (s + 1.0) * (s - 1.0));
  }
};

Real alpha_mp(int k, const Real& A, const Real& B) {
  mpfr_prec_t p = A.precision();
  if (k == 0) return (B - A) / (A + B + 2L);
  Real s = A + B + 2L * k;
  return (B * B - A * A) / (s * (s + 2L));
}

Real beta_mp(int k, const Real& A, const Real& B) {
  if (k == 1) {
    Real s = A + B + 2L;
    return 4L * (A + 1L) * (B + 1L) / (s * s * (s + 1L));
  }
  Real s = A + B + 2L * k;
  return (4L * k) * (A + k) * (B + k) * (A + B + k) / (s * s * (s + 1L) * (s - 1L));
}

// eigenvalues of a symmetric tridiagonal matrix by Sturm-count bisection,
// double precision; used only as Newton starting points
std::vector<double> tridiag_eigenvalues(const std::vector<double>& d,
                                        const std::vector<double>& e) {
  int n = static_cast<int>(d.size());
  auto count_below = [&](double x) {
    // number of eigenvalues < x
    int cnt = 0;
    double q = d[0] - x;
    if (q < 0) ++cnt;
    for (int i = 1; i < n; ++i) {
      double denom = (q == 0.0) ? 1e-300 : q;
      q = d[i] - x - e[i - 1] * e[i - 1] / denom;
      if (q < 0) ++cnt;
    }
    return cnt;
  };
  double lo = d[0], hi = d[0];
  for (int i = 0; i < n; ++i) {
    double r = (i > 0 ? std::fabs(e[i - 1]) : 0.0) + (i < n - 1 ? std::fabs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  lo -= 1e-12;
  hi += 1e-12;
  std::vector<double> ev(n);
  for (int k = 0; k < n; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (a + b);
      if (count_below(mid) <= k)
        a = mid;
      else
        b = mid;
    }
    ev[k] = 0.5 * (a + b);
  }
  return ev;
}

// standard-interval Gauss-Jacobi: nodes in (-1,1), weights for
// int_{-1}^{1} f(x) (1-x)^A (1+x)^B dx
void gauss_jacobi_standard(int n, const Real& A, const Real& B, mpfr_prec_t prec,
                           std::vector<Real>& nodes, std::vector<Real>& weights) {
  JacobiChain ch{A.to_double(), B.to_double()};
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) d[k] = ch.alpha(k);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(ch.beta(k));
  std::vector<double> guess = tridiag_eigenvalues(d, e);

  // mu0 = 2^{A+B+1} Beta(A+1, B+1)
  Real mu0 = exp((A + B + 1L) * log(Real(2.0, prec)) + lngamma_pos(A + 1L) +
                 lngamma_pos(B + 1L) - lngamma_pos(A + B + 2L));

  std::vector<Real> al(n), sqbe(n);
  for (int k = 0; k < n; ++k) al[k] = alpha_mp(k, A.round_to(prec), B.round_to(prec));
  for (int k = 1; k < n; ++k) sqbe[k] = sqrt(beta_mp(k, A.round_to(prec), B.round_to(prec)));

  nodes.resize(n);
  weights.resize(n);
  Real inv_sqrt_mu0 = 1L / sqrt(mu0);
  for (int i = 0; i < n; ++i) {
    Real x(guess[i], prec);
    // Newton on orthonormal p_n, precision ladder
    for (mpfr_prec_t pw = 96; pw / 2 < prec; pw = std::min<mpfr_prec_t>(pw * 2, prec)) {
      Real xi = x.round_to(pw);
      for (int it = 0; it < (pw == prec ? 3 : 2); ++it) {
        Real pk = inv_sqrt_mu0.round_to(pw), pkm(0.0, pw);
        Real dk(0.0, pw), dkm(0.0, pw);
        for (int k = 0; k < n; ++k) {
          Real t = (xi - al[k].round_to(pw)) * pk -
                   (k > 0 ? sqbe[k].round_to(pw) * pkm : Real(0.0, pw));
          Real dt = pk + (xi - al[k].round_to(pw)) * dk -
                    (k > 0 ? sqbe[k].round_to(pw) * dkm : Real(0.0, pw));
          // p_{k+1} = t / sqrt(beta_{k+1}); the k = n-1 normalization does
          // not move the root, any positive constant works there
          Real denom = (k + 1 < n) ? sqbe[k + 1].round_to(pw)
                                   : sqrt(beta_mp(n, A.round_to(pw), B.round_to(pw)));
          pkm = pk;
          pk = t / denom;
          dkm = dk;
          dk = dt / denom;
        }
        if (!dk.is_zero()) xi = xi - pk / dk;
      }
      x = xi.round_to(prec);
      if (pw >= prec) break;
    }
    nodes[i] = x;
    // Christoffel weight: w = 1 / sum_{k=0}^{n-1} p_k(x)^2 (orthonormal chain)
    Real pk = inv_sqrt_mu0, pkm(0.0, prec), sum = pk * pk;
    for (int k = 0; k + 1 < n; ++k) {
      Real t = ((x - al[k]) * pk - (k > 0 ? sqbe[k] * pkm : Real(0.0, prec))) / sqbe[k + 1];
      pkm = pk;
      pk = t;
      sum += pk * pk;
    }
    weights[i] = 1L / sum;
  }
}

struct RuleKey {
  int kind;
  int n;
  mpfr_prec_t prec;
  std::string a, b;
  int power;
  std::string scale;
  bool operator<(const RuleKey& o) const {
    return std::tie(kind, n, prec, a, b, power, scale) <
           std::tie(o.kind, o.n, o.prec, o.a, o.b, o.power, o.scale);
  }
};

std::map<RuleKey, std::shared_ptr<const QuadratureRule>>& rule_cache() {
  static std::map<RuleKey, std::shared_ptr<const QuadratureRule>> c;
  return c;
}
std::mutex& rule_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

QuadratureRule gauss_jacobi_rule(int n, const Real& alpha, const Real& beta,
                                 mpfr_prec_t prec) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi_rule: n >= 1 required");
  if (alpha <= -1L || beta <= -1L)
    throw std::invalid_argument("gauss_jacobi_rule: alpha, beta must exceed -1");
  // (0,1) weight x^alpha (1-x)^beta  <->  (-1,1) weight (1-xi)^A (1+xi)^B
  // with A = beta, B = alpha, x = (1+xi)/2, dx = dxi/2
  Real A = beta.round_to(prec), B = alpha.round_to(prec);
  std::vector<Real> xi, w;
  gauss_jacobi_standard(n, A, B, prec, xi, w);
  QuadratureRule r;
  r.kind = QuadratureRule::Kind::GaussJacobi;
  r.alpha = alpha.round_to(prec);
  r.beta = beta.round_to(prec);
  r.nodes.resize(n);
  r.weights.resize(n);
  Real half = Real::from_ratio(1, 2, prec);
  // 2^{-(alpha+beta+1)} folds the affine map into the weights
  Real scale = exp(-(r.alpha + r.beta + 1L) * log(Real(2.0, prec)));
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = (xi[i] + 1L) * half;
    r.weights[i] = w[i] * scale;
  }
  return r;
}

QuadratureRule gauss_legendre_rule(int n, mpfr_prec_t prec) {
  Real zero(0.0, prec);
  QuadratureRule r = gauss_jacobi_rule(n, zero, zero, prec);
  r.kind = QuadratureRule::Kind::GaussLegendre;
  return r;
}

QuadratureRule half_line_rule(int n, mpfr_prec_t prec, int power, double scale) {
  QuadratureRule gl = gauss_legendre_rule(n, prec);
  QuadratureRule r;
  r.kind = QuadratureRule::Kind::HalfLine;
  r.transform_power = power;
  r.transform_scale = Real(scale, prec);
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const Real& u = gl.nodes[i];
    Real om = 1L - u;
    Real ratio = u / om;
    Real x = r.transform_scale * pow(ratio, static_cast<long>(power));
    Real jac = r.transform_scale * Real(static_cast<double>(power), prec) *
               pow(ratio, static_cast<long>(power - 1)) / (om * om);
    r.nodes[i] = x;
    r.weights[i] = gl.weights[i] * jac;
  }
  return r;
}

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi(int n, const Real& alpha,
                                                          const Real& beta,
                                                          mpfr_prec_t prec) {
  RuleKey key{0, n, prec, alpha.str(), beta.str(), 0, ""};
  {
    std::lock_guard<std::mutex> lk(rule_mutex());
    auto it = rule_cache().find(key);
    if (it != rule_cache().end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(n, alpha, beta, prec));
  std::lock_guard<std::mutex> lk(rule_mutex());
  return rule_cache().emplace(key, rule).first->second;
}

std::shared_ptr<const QuadratureRule> cached_gauss_legendre(int n, mpfr_prec_t prec) {
  RuleKey key{1, n, prec, "", "", 0, ""};
  {
    std::lock_guard<std::mutex> lk(rule_mutex());
    auto it = rule_cache().find(key);
    if (it != rule_cache().end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_legendre_rule(n, prec));
  std::lock_guard<std::mutex> lk(rule_mutex());
  return rule_cache().emplace(key, rule).first->second;
}

}  // namespace rmjm

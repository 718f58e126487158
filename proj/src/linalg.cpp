#include "rmjm/linalg.hpp"

#include <stdexcept>

namespace rmjm {

MatrixR MatrixR::identity(std::size_t n, mpfr_prec_t prec) {
  MatrixR m(n, n, prec);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Real(1.0, prec);
  return m;
}

MatrixR MatrixR::operator*(const MatrixR& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("MatrixR: shape mismatch");
  mpfr_prec_t prec = rows_ && cols_ ? data_[0].precision() : Real::kMinPrec;
  MatrixR r(rows_, o.cols_, prec);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Real& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

Real det_ext(const MatrixR& m_in) {
  if (m_in.rows() != m_in.cols()) throw std::invalid_argument("det_ext: square matrix required");
  std::size_t n = m_in.rows();
  if (n == 0) return Real(1.0, Real::kMinPrec);
  mpfr_prec_t prec = m_in(0, 0).precision();
  MatrixR m = m_in;

  // balance rows then columns by exact powers of two
  long scale_exp = 0;
  for (std::size_t i = 0; i < n; ++i) {
    long emax = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j)
      if (!m(i, j).is_zero()) {
        long e = m(i, j).exponent();
        if (!any || e > emax) emax = e;
        any = true;
      }
    if (!any) return Real(0.0, prec);
    scale_exp += emax;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).ldexp(-emax);
  }
  for (std::size_t j = 0; j < n; ++j) {
    long emax = 0;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
      if (!m(i, j).is_zero()) {
        long e = m(i, j).exponent();
        if (!any || e > emax) emax = e;
        any = true;
      }
    if (!any) return Real(0.0, prec);
    scale_exp += emax;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = m(i, j).ldexp(-emax);
  }

  int sign = 1;
  Real det(1.0, prec);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(piv, k))) piv = i;
    if (m(piv, k).is_zero()) return Real(0.0, prec);
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Real f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  if (sign < 0) det = -det;
  return det.ldexp(scale_exp);
}

LuFactors lu_factor(MatrixR m) {
  std::size_t n = m.rows();
  LuFactors f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs(m(i, k)) > abs(m(piv, k))) piv = i;
    if (m(piv, k).is_zero()) {
      f.singular = true;
      break;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(i, k) = m(i, k) / m(k, k);
      if (m(i, k).is_zero()) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j);
    }
  }
  f.lu = std::move(m);
  return f;
}

std::vector<Real> lu_solve(const LuFactors& f, std::vector<Real> b) {
  if (f.singular) throw std::runtime_error("lu_solve: singular factorization");
  std::size_t n = f.perm.size();
  std::vector<Real> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= f.lu(ii, j) * x[j];
    x[ii] /= f.lu(ii, ii);
  }
  return x;
}

}  // namespace rmjm

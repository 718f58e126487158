#pragma once

#include <vector>

#include "rmjm/real.hpp"

namespace rmjm {

class MatrixR {
 public:
  MatrixR() = default;
  MatrixR(std::size_t rows, std::size_t cols, mpfr_prec_t prec)
      : rows_(rows), cols_(cols), data_(rows * cols, Real(prec)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  static MatrixR identity(std::size_t n, mpfr_prec_t prec);
  MatrixR operator*(const MatrixR& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Real> data_;
};

// determinant by partially pivoted elimination with exact power-of-two
// row/column balancing; singular matrices give an exact 0
Real det_ext(const MatrixR& m);

// in-place LU with partial pivoting; returns false if singular
struct LuFactors {
  MatrixR lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};
LuFactors lu_factor(MatrixR m);
std::vector<Real> lu_solve(const LuFactors& f, std::vector<Real> b);

}  // namespace rmjm

#pragma once

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace rmjm {

// Arbitrary-precision real scalar. Every value carries its own mantissa
// width; binary operations run at the wider of the two operand precisions
// and round to nearest, so identical inputs give bit-identical results.
class Real {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  Real() { mpfr_init2(v_, kMinPrec); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, mpfr_prec_t prec) : Real(static_cast<long>(x), prec) {}
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from_string(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("Real: unparseable decimal '" + s + "'");
    return r;
  }
  // exact value p/q
  static Real from_ratio(long p, unsigned long q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, p, MPFR_RNDN);
    mpfr_div_ui(r.v_, r.v_, q, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  Real round_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // round-trippable decimal string (enough digits for the mantissa width)
  std::string str() const;
  std::string str(int digits) const;

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long b) { mpfr_add_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator-=(long b) { mpfr_sub_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator*=(long b) { mpfr_mul_si(v_, v_, b, MPFR_RNDN); return *this; }
  Real& operator/=(long b) { mpfr_div_si(v_, v_, b, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, long b) { Real r(a); mpfr_add_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend Real operator-(const Real& a, long b) { Real r(a); mpfr_sub_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend Real operator*(const Real& a, long b) { Real r(a); mpfr_mul_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend Real operator/(const Real& a, long b) { Real r(a); mpfr_div_si(r.v_, r.v_, b, MPFR_RNDN); return r; }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator-(long a, const Real& b) { Real r(b.precision()); mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN); return r; }
  friend Real operator/(long a, const Real& b) { Real r(b.precision()); mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN); return r; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

  friend Real abs(const Real& a) { Real r(a.precision()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
  friend Real exp(const Real& a) { return un(mpfr_exp, a); }
  friend Real expm1(const Real& a) { return un(mpfr_expm1, a); }
  friend Real log(const Real& a) { return un(mpfr_log, a); }
  friend Real log1p(const Real& a) { return un(mpfr_log1p, a); }
  friend Real sin(const Real& a) { return un(mpfr_sin, a); }
  friend Real cos(const Real& a) { return un(mpfr_cos, a); }
  friend Real atan(const Real& a) { return un(mpfr_atan, a); }
  friend Real acos(const Real& a) { return un(mpfr_acos, a); }
  friend Real floor(const Real& a) { Real r(a.precision()); mpfr_floor(r.v_, a.v_); return r; }
  friend Real pow(const Real& a, const Real& b) { return bin(mpfr_pow, a, b); }
  friend Real pow(const Real& a, long n) {
    Real r(a.precision());
    mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  // ln Gamma for x > 0 (sign always +)
  friend Real lngamma_pos(const Real& a) { return un(mpfr_lngamma, a); }
  friend Real max(const Real& a, const Real& b) { return bin(mpfr_max, a, b); }
  friend Real min(const Real& a, const Real& b) { return bin(mpfr_min, a, b); }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // 2^e as an exact value
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  // exact scaling by 2^e
  Real ldexp(long e) const {
    Real r(*this);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }
  // exponent of the leading bit (0 for zero)
  long exponent() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
  template <typename F>
  static Real bin(F f, const Real& a, const Real& b) {
    mpfr_prec_t p = a.precision() > b.precision() ? a.precision() : b.precision();
    Real r(p);
    f(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <typename F>
  static Real un(F f, const Real& a) {
    Real r(a.precision());
    f(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

}  // namespace rmjm

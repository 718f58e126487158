#pragma once

#include <map>
#include <vector>

#include "rmjm/partitions.hpp"
#include "rmjm/rational.hpp"

namespace rmjm {

// polynomial in a symbolic size N over the rationals, ascending coefficients
struct NPoly {
  std::vector<Rational> c;  // c[0] + c[1] N + ...

  NPoly() = default;
  explicit NPoly(Rational constant) : c{std::move(constant)} { trim(); }
  static NPoly var() { return NPoly(std::vector<Rational>{Rational(0), Rational(1)}); }
  explicit NPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c.empty(); }
  void trim();
  Rational eval(long n) const;
  NPoly operator+(const NPoly& o) const;
  NPoly operator*(const NPoly& o) const;
  NPoly operator*(const Rational& q) const;
  bool operator==(const NPoly& o) const { return c == o.c; }
};

// monomial over indexed generators: sorted (index >= 1, power >= 1) pairs;
// index-0 generators are identically 1 and never stored
using GenMonomial = std::vector<std::pair<unsigned, unsigned>>;

GenMonomial mono_mul(const GenMonomial& a, const GenMonomial& b);
unsigned mono_factor_count(const GenMonomial& m);  // sum of powers
unsigned mono_weighted_degree(const GenMonomial& m);   // sum index*power
unsigned mono_top_index(const GenMonomial& m);

// finite linear combination of generator monomials (e_h's or p_m's);
// zero coefficients are never stored
template <typename C>
struct SparsePoly {
  std::map<GenMonomial, C> terms;

  static SparsePoly constant(C v) {
    SparsePoly r;
    r.add({}, std::move(v));
    return r;
  }
  static SparsePoly generator(unsigned idx, C one) {
    SparsePoly r;
    if (idx == 0) return constant(std::move(one));
    r.add({{idx, 1}}, std::move(one));
    return r;
  }

  bool is_zero_coeff(const C& v) const;
  void add(const GenMonomial& m, C v) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!is_zero_coeff(v)) terms.emplace(m, std::move(v));
    } else {
      it->second = it->second + v;
      if (is_zero_coeff(it->second)) terms.erase(it);
    }
  }
  SparsePoly operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, v] : o.terms) r.add(m, v);
    return r;
  }
  SparsePoly operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (auto& [ma, va] : terms)
      for (auto& [mb, vb] : o.terms) r.add(mono_mul(ma, mb), va * vb);
    return r;
  }
  SparsePoly scaled(const C& f) const {
    SparsePoly r;
    for (auto& [m, v] : terms) r.add(m, v * f);
    return r;
  }
  SparsePoly pow(unsigned e, C one) const {
    SparsePoly r = constant(one);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }
  // replace generator i by gens[i]; gens must cover every index used
  SparsePoly substitute(const std::vector<SparsePoly>& gens, C one) const {
    SparsePoly r;
    for (auto& [m, v] : terms) {
      SparsePoly t = constant(one);
      for (auto& [idx, p] : m) t = t * gens.at(idx).pow(p, one);
      r = r + t.scaled(v);
    }
    return r;
  }
};

template <>
inline bool SparsePoly<Rational>::is_zero_coeff(const Rational& v) const {
  return v == 0;
}
template <>
inline bool SparsePoly<NPoly>::is_zero_coeff(const NPoly& v) const {
  return v.is_zero();
}

using EPolyQ = SparsePoly<Rational>;   // exact rational coefficients
using EPolyN = SparsePoly<NPoly>;      // coefficients polynomial in N

// R_k as a polynomial in the limiting e-generators (Thm-level limit object):
// sum over partitions of k into parts 1,2 of 2^{-2 theta} k!/(l-theta)! e_theta
EPolyQ rk_limit_expansion(unsigned k);

// R_{N,k} as a polynomial in the e-generators of inverse points with
// coefficients polynomial in N, summed over all partitions of k
EPolyN rnk_finite_expansion(unsigned k);

// same, evaluated at a concrete size (requires n >= k)
EPolyQ rnk_finite_expansion_at(unsigned k, long n);

EPolyQ evaluate_coeffs(const EPolyN& p, long n);

struct NewtonTables {
  // p_in_e[m], m >= 1: power sum p_m as a polynomial in e-generators
  std::vector<EPolyQ> p_in_e;
  // e_in_p[m], m >= 1: e_m as a polynomial in p-generators
  std::vector<EPolyQ> e_in_p;
};
NewtonTables newton_p_from_e(unsigned max_degree);

}  // namespace rmjm

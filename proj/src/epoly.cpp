#include "rmjm/epoly.hpp"

#include <stdexcept>

namespace rmjm {

void NPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Rational NPoly::eval(long n) const {
  Rational acc(0), np(1);
  for (const Rational& ci : c) {
    acc += ci * np;
    np *= n;
  }
  return acc;
}

NPoly NPoly::operator+(const NPoly& o) const {
  NPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

NPoly NPoly::operator*(const NPoly& o) const {
  if (c.empty() || o.c.empty()) return {};
  NPoly r;
  r.c.assign(c.size() + o.c.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  r.trim();
  return r;
}

NPoly NPoly::operator*(const Rational& q) const {
  NPoly r = *this;
  for (auto& ci : r.c) ci *= q;
  r.trim();
  return r;
}

GenMonomial mono_mul(const GenMonomial& a, const GenMonomial& b) {
  GenMonomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
      r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first)
      r.push_back(b[j++]);
    else {
      r.push_back({a[i].first, a[i].second + b[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

unsigned mono_factor_count(const GenMonomial& m) {
  unsigned c = 0;
  for (auto& [idx, p] : m) c += p;
  return c;
}

unsigned mono_weighted_degree(const GenMonomial& m) {
  unsigned c = 0;
  for (auto& [idx, p] : m) c += idx * p;
  return c;
}

unsigned mono_top_index(const GenMonomial& m) { return m.empty() ? 0 : m.back().first; }

EPolyQ rk_limit_expansion(unsigned k) {
  EPolyQ out;
  for (const Partition& mu : partitions_parts_le2(k)) {
    unsigned theta = mu.count_twos();
    unsigned l = mu.length();
    Rational coeff = Rational(factorial(k)) / Rational(factorial(l - theta));
    coeff /= Rational(Int(1) << (2 * theta));
    if (theta == 0)
      out.add({}, coeff);
    else
      out.add({{theta, 1}}, coeff);
  }
  if (k == 0) out = EPolyQ::constant(Rational(1));
  return out;
}

EPolyN rnk_finite_expansion(unsigned k) {
  EPolyN out;
  NPoly nvar = NPoly::var();
  for (const Partition& mu : all_partitions(k)) {
    unsigned l = mu.length();
    // multinomial k!/(prod mu_j!) times 1/(prod m_r!)
    Rational base = Rational(factorial(k));
    for (unsigned p : mu.parts) base /= Rational(factorial(p));
    for (unsigned r = 1; r <= k; ++r) base /= Rational(factorial(mu.multiplicity(r)));
    // parts >= 2 carry c_j = (2^{mu_j} - 2)/4
    std::vector<Rational> cs;
    for (unsigned p : mu.parts)
      if (p >= 2) cs.push_back(Rational(Int((1L << p) - 2), Int(4)));
    unsigned theta = static_cast<unsigned>(cs.size());
    for (unsigned long mask = 0; mask < (1UL << theta); ++mask) {
      Rational cprod = base;
      unsigned h = 0;
      for (unsigned j = 0; j < theta; ++j)
        if (mask & (1UL << j)) {
          cprod *= cs[j];
          ++h;
        }
      cprod *= Rational(factorial(h));
      // injection count (N-h)!/(N-l)! = prod_{i=h}^{l-1} (N-i)
      NPoly inj(cprod);
      for (unsigned i = h; i < l; ++i) inj = inj * (nvar + NPoly(Rational(-(long)i)));
      if (h == 0)
        out.add({}, inj);
      else
        out.add({{h, 1}}, inj);
    }
  }
  if (k == 0) out = EPolyN::constant(NPoly(Rational(1)));
  return out;
}

EPolyQ evaluate_coeffs(const EPolyN& p, long n) {
  EPolyQ out;
  for (auto& [m, c] : p.terms) out.add(m, c.eval(n));
  return out;
}

EPolyQ rnk_finite_expansion_at(unsigned k, long n) {
  if (n < static_cast<long>(k))
    throw std::invalid_argument("rnk_finite_expansion_at: requires N >= k");
  return evaluate_coeffs(rnk_finite_expansion(k), n);
}

NewtonTables newton_p_from_e(unsigned max_degree) {
  if (max_degree < 1) throw std::invalid_argument("newton_p_from_e: max_degree >= 1");
  NewtonTables t;
  Rational one(1);
  t.p_in_e.resize(max_degree + 1);
  t.e_in_p.resize(max_degree + 1);
  t.p_in_e[0] = EPolyQ::constant(one);  // placeholder, p_0 unused
  t.e_in_p[0] = EPolyQ::constant(one);
  for (unsigned m = 1; m <= max_degree; ++m) {
    // p_m = (-1)^{m-1} m e_m + sum_{i=1}^{m-1} (-1)^{m-1-i} e_{m-i} p_i
    EPolyQ pm = EPolyQ::generator(m, Rational((m % 2) ? long(m) : -long(m)));
    for (unsigned i = 1; i < m; ++i) {
      long sgn = ((m - 1 - i) % 2 == 0) ? 1 : -1;
      pm = pm + (EPolyQ::generator(m - i, Rational(sgn)) * t.p_in_e[i]);
    }
    t.p_in_e[m] = pm;
    // e_m = (1/m) sum_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i, expressed in p's
    EPolyQ em;
    for (unsigned i = 1; i <= m; ++i) {
      long sgn = ((i - 1) % 2 == 0) ? 1 : -1;
      EPolyQ term = t.e_in_p[m - i] * EPolyQ::generator(i, Rational(sgn));
      em = em + term;
    }
    t.e_in_p[m] = em.scaled(Rational(1, m));
  }
  return t;
}

}  // namespace rmjm

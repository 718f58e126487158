#pragma once

#include <map>

#include "rmjm/partitions.hpp"

namespace rmjm {

// finite linear combination of Schur functions in a fixed number of
// variables; partitions with more rows than variables are dropped as zero
struct SchurExpansion {
  unsigned variable_count = 0;
  std::map<Partition, Rational> terms;

  static SchurExpansion one(unsigned n_vars) {
    SchurExpansion s;
    s.variable_count = n_vars;
    s.terms.emplace(Partition{}, Rational(1));
    return s;
  }
  void add(const Partition& p, const Rational& c) {
    if (c == 0 || p.length() > variable_count) return;
    auto it = terms.find(p);
    if (it == terms.end())
      terms.emplace(p, c);
    else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

// multiply by the elementary symmetric polynomial e_k (vertical k-strips);
// requires 0 <= k <= variable_count
SchurExpansion pieri_e_multiply(const SchurExpansion& in, unsigned k);

}  // namespace rmjm

#pragma once

#include <functional>
#include <vector>

#include "rmjm/rational.hpp"

namespace rmjm {

// integer partition, parts weakly decreasing and >= 1
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> p);

  unsigned length() const { return static_cast<unsigned>(parts.size()); }
  unsigned long weight() const;
  // number of parts equal to 2 (the theta statistic for parts <= 2)
  unsigned count_twos() const;
  unsigned multiplicity(unsigned r) const;
  unsigned part(std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  Partition conjugate() const;
  bool empty() const { return parts.empty(); }

  bool operator<(const Partition& o) const { return parts < o.parts; }
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

// all partitions of k with every part equal to 1 or 2
std::vector<Partition> partitions_parts_le2(unsigned k);

// all partitions of k
std::vector<Partition> all_partitions(unsigned k);

// enumerate (l_1,...,l_slots) >= 0 with sum = total together with the
// multinomial coefficient total!/(l_1!...l_slots!)
void for_each_composition(unsigned total, unsigned slots,
                          const std::function<void(const std::vector<unsigned>&, const Int&)>& fn);
unsigned long count_compositions(unsigned total, unsigned slots);

}  // namespace rmjm

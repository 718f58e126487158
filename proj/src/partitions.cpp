#include "rmjm/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmjm {

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) throw std::invalid_argument("Partition: zero part");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

unsigned long Partition::weight() const {
  unsigned long w = 0;
  for (unsigned p : parts) w += p;
  return w;
}

unsigned Partition::count_twos() const { return multiplicity(2); }

unsigned Partition::multiplicity(unsigned r) const {
  unsigned c = 0;
  for (unsigned p : parts) c += (p == r);
  return c;
}

Partition Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<unsigned> c(parts[0], 0);
  for (unsigned p : parts)
    for (unsigned j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<Partition> partitions_parts_le2(unsigned k) {
  std::vector<Partition> out;
  for (unsigned twos = k / 2 + 1; twos-- > 0;) {
    unsigned ones = k - 2 * twos;
    std::vector<unsigned> p(twos, 2);
    p.insert(p.end(), ones, 1);
    out.emplace_back(std::move(p));
  }
  return out;
}

namespace {
void gen_partitions(unsigned remaining, unsigned max_part, std::vector<unsigned>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> all_partitions(unsigned k) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  gen_partitions(k, k == 0 ? 1 : k, cur, out);
  return out;
}

namespace {
void gen_comp(unsigned slot, unsigned remaining, std::vector<unsigned>& cur, const Int& total_fac,
              const std::function<void(const std::vector<unsigned>&, const Int&)>& fn) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    Int denom(1);
    for (unsigned l : cur) denom *= factorial(l);
    fn(cur, total_fac / denom);
    return;
  }
  for (unsigned v = 0; v <= remaining; ++v) {
    cur[slot] = v;
    gen_comp(slot + 1, remaining - v, cur, total_fac, fn);
  }
}
}  // namespace

void for_each_composition(unsigned total, unsigned slots,
                          const std::function<void(const std::vector<unsigned>&, const Int&)>& fn) {
  if (slots < 1) throw std::invalid_argument("for_each_composition: slots >= 1");
  std::vector<unsigned> cur(slots, 0);
  gen_comp(0, total, cur, factorial(total), fn);
}

unsigned long count_compositions(unsigned total, unsigned slots) {
  Int c = binomial(total + slots - 1, slots - 1);
  return c.get_ui();
}

}  // namespace rmjm

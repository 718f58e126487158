#include "rmjm/real.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace rmjm {

std::string Real::str() const {
  // ~0.3010 digits per bit, plus slack so parse(str(x)) == x at equal precision
  int digits = static_cast<int>(std::ceil(0.30103 * static_cast<double>(precision()))) + 3;
  return str(digits);
}

std::string Real::str(int digits) const {
  char* out = nullptr;
  if (mpfr_asprintf(&out, "%.*Rg", digits, v_) < 0) return "nan";
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace rmjm

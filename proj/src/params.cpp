#include "bsgroup/params.hpp"

#include <limits>
#include <numeric>

#include "bsgroup/errors.hpp"

namespace bsgroup {

BsParams BsParams::make(std::int64_t m, std::int64_t n) {
  if (m == 0 || n == 0) {
    throw InvalidParameters("parameters must be nonzero, got (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
  }
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (m == kMin || n == kMin) throw InvalidParameters("parameter magnitude out of range");

  auto abs = [](std::int64_t x) { return x < 0 ? -x : x; };
  if (abs(m) > abs(n)) std::swap(m, n);
  if (n < 0) {
    m = -m;
    n = -n;
  }
  return BsParams(m, n, std::gcd(abs(m), n));
}

std::string BsParams::to_string() const {
  return "(" + std::to_string(m_) + "," + std::to_string(n_) + ")";
}

}  // namespace bsgroup

#include "bsgroup/bigint.hpp"

#include <cctype>

namespace bsgroup {

DivMod floor_divmod(const BigInt& value, const BigInt& modulus) {
  BigInt m = abs(modulus);
  BigInt r = value % m;
  if (r < 0) r += m;
  BigInt q = (value - r) / m;
  if (modulus < 0) q = -q;
  return {std::move(q), std::move(r)};
}

BigInt floor_mod(const BigInt& value, const BigInt& modulus) {
  BigInt m = abs(modulus);
  BigInt r = value % m;
  if (r < 0) r += m;
  return r;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::optional<BigInt> parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) return std::nullopt;
  BigInt result = 0;
  for (; pos < text.size(); ++pos) {
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (!std::isdigit(c)) return std::nullopt;
    result *= 10;
    result += static_cast<int>(c - '0');
  }
  return negative ? BigInt(-result) : result;
}

}  // namespace bsgroup

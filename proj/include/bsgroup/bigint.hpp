#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace bsgroup {

using BigInt = boost::multiprecision::cpp_int;

// value = quotient * modulus + remainder with 0 <= remainder < |modulus|.
struct DivMod {
  BigInt quotient;
  BigInt remainder;
};

DivMod floor_divmod(const BigInt& value, const BigInt& modulus);
BigInt floor_mod(const BigInt& value, const BigInt& modulus);

std::string to_string(const BigInt& value);

// Accepts an optional sign followed by decimal digits, nothing else.
std::optional<BigInt> parse_bigint(std::string_view text);

inline int sign(const BigInt& value) { return value.sign(); }

inline bool fits_int64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace bsgroup

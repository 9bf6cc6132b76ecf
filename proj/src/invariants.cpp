#include "bsgroup/invariants.hpp"

#include "bsgroup/errors.hpp"

namespace bsgroup {

namespace {

ModularValue reduced(BigInt p, BigInt q) {
  const BigInt g = gcd(p, q);
  return {p / g, q / g};
}

}  // namespace

ModularValue operator*(const ModularValue& x, const ModularValue& y) {
  return reduced(x.numerator * y.numerator, x.denominator * y.denominator);
}

ModularValue modular_delta(const Word& g) {
  const BsParams& p = g.params();
  const BigInt e = g.t_exponent_sum();
  if (e > std::numeric_limits<unsigned>::max() || -e > std::numeric_limits<unsigned>::max()) {
    throw Error("t-exponent sum too large for an explicit modular value");
  }
  const unsigned power = abs(e).convert_to<unsigned>();
  // n/|m| = n0/m0 is already in lowest terms, so are its powers.
  BigInt num = boost::multiprecision::pow(BigInt(p.n0()), power);
  BigInt den = boost::multiprecision::pow(BigInt(p.m0()), power);
  if (e < 0) std::swap(num, den);
  return {std::move(num), std::move(den)};
}

ScaleSet scale_set(const BsParams& params) { return {params.m0(), params.n0()}; }

namespace {

bool is_power_of(const BigInt& value, std::int64_t base) {
  if (value == 1) return true;
  if (base == 1) return false;
  BigInt v = value;
  while (v > 1) {
    if (v % base != 0) return false;
    v /= base;
  }
  return v == 1;
}

}  // namespace

bool scale_member(const ScaleSet& s, const BigInt& value) {
  if (value < 1) throw InvalidParameters("scale values are positive integers");
  return is_power_of(value, s.m0) || is_power_of(value, s.n0);
}

std::int64_t subgroup_index(const BsParams& params, AssociatedSubgroup which) {
  return which == AssociatedSubgroup::MK ? params.abs_m() : params.n();
}

HnnDescriptor hnn_descriptor(const BsParams& params) {
  HnnDescriptor h{params, "", params.abs_m(), params.n(), "t", params.discrete_completion()};
  if (h.discrete) {
    h.base = "Z/" + std::to_string(params.abs_m()) + "Z";
  } else {
    h.base = "K" + params.to_string();
  }
  return h;
}

std::string HnnDescriptor::describe() const {
  if (discrete) return base + " * Z";
  const std::string m = std::to_string(params.m());
  const std::string n = std::to_string(params.n());
  return "HNN(" + base + ", " + m + base + ", " + m + " -> " + n + ")";
}

std::optional<BigInt> residue_action(const BigInt& k, const BigInt& modulus, const Word& g) {
  if (modulus < 1) throw InvalidParameters("modulus must be positive");
  const Word reduced_g = britton_reduce(g);
  BigInt exponent = k;
  const auto& syl = reduced_g.syllables();
  // g a^k g^-1 = x1 (x2 (... (xl a^k xl^-1) ...) x2^-1) x1^-1: innermost letter first.
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    if (it->letter == Letter::A) continue;
    const int direction = sign(it->exponent);
    for (BigInt i = abs(it->exponent); i > 0; --i) {
      auto image = conjugate_by_t(exponent, direction, g.params());
      if (!image) return std::nullopt;
      exponent = std::move(*image);
    }
  }
  return floor_mod(exponent, modulus);
}

}  // namespace bsgroup

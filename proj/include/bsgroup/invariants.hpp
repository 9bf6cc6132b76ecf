#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bsgroup/bigint.hpp"
#include "bsgroup/params.hpp"
#include "bsgroup/word.hpp"

namespace bsgroup {

/// A positive rational p/q in lowest terms.
struct ModularValue {
  BigInt numerator;
  BigInt denominator;

  std::string to_string() const { return numerator.str() + "/" + denominator.str(); }
  friend bool operator==(const ModularValue&, const ModularValue&) = default;
};

ModularValue operator*(const ModularValue& x, const ModularValue& y);

/// The set {m0^k : k >= 0} ∪ {n0^k : k >= 0} with gcd(m0, n0) = 1.
struct ScaleSet {
  std::int64_t m0;
  std::int64_t n0;

  friend bool operator==(const ScaleSet&, const ScaleSet&) = default;
};

enum class AssociatedSubgroup { MK, NK };

/// G(m,n) as an HNN extension of its compact open subgroup K(m,n) along
/// mK -> nK. When |m| = n, K is finite cyclic of order |m| and the group is
/// Z/|m|Z * Z.
struct HnnDescriptor {
  BsParams params;
  std::string base;
  std::int64_t associated_subgroup_index_in;   // [K : mK]
  std::int64_t associated_subgroup_index_out;  // [K : nK]
  std::string stable_letter = "t";
  bool discrete = false;

  std::string describe() const;
};

/// Delta(g) = (n/|m|)^e, e the t-exponent sum of g.
ModularValue modular_delta(const Word& g);

ScaleSet scale_set(const BsParams& params);
bool scale_member(const ScaleSet& s, const BigInt& value);

std::int64_t subgroup_index(const BsParams& params, AssociatedSubgroup which);

HnnDescriptor hnn_descriptor(const BsParams& params);

/// Residue mod `modulus` of the exponent of g a^k g^-1 when the conjugate
/// stays in <a>; nullopt when some t-step leaves <a>. g is Britton-reduced
/// first so the stepwise test is exact.
std::optional<BigInt> residue_action(const BigInt& k, const BigInt& modulus, const Word& g);

}  // namespace bsgroup

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bsgroup/params.hpp"

namespace bsgroup {

using RawPair = std::pair<std::int64_t, std::int64_t>;

/// What decided a verdict.
enum class VerdictReason {
  DiscreteSameOrder,         // both Z/kZ * Z with the same k
  DiscreteDifferentOrder,    // both discrete, largest finite orders differ
  DiscretenessDiffers,       // one completion discrete, the other not
  ScaleSetDiffers,           // (m0, n0) differ
  MinIndexDiffers,           // |m| differs
  SignDiffers,               // (m, n) vs (-m, n)
  EqualParameters,           // identical normalised parameters
  LengthMismatch,            // products with different numbers of factors
  NoMatching,                // no factor-wise bijection
  Matched,                   // factor-wise bijection found
};

std::string_view to_string(VerdictReason reason);

struct IsoVerdict {
  bool isomorphic = false;
  /// 1-based: factor i of the left product maps to factor (*witness)[i-1].
  std::optional<std::vector<std::size_t>> witness;
  VerdictReason kind = VerdictReason::NoMatching;
  std::string reason;
};

/// BS(m,n) ≅ BS(p,q) iff {m,n} = {εp, εq} for some ε = ±1. Throws
/// InvalidParameters on a zero entry.
bool bs_isomorphic(RawPair first, RawPair second);

/// Isomorphism of completions G(m,n), G(p,q), decided through invariants:
/// discreteness, order of the finite base in the discrete case, then scale
/// set, minimal index |m| and the sign of m. Throws OutOfHypothesis when
/// |m| = 1 or |p| = 1.
IsoVerdict g_isomorphic(const BsParams& first, const BsParams& second);

/// Products of completions: isomorphic iff the factor lists have the same
/// length and admit a bijection of pairwise isomorphic factors. The witness
/// is the lexicographically smallest such bijection.
IsoVerdict product_isomorphic(const std::vector<BsParams>& left, const std::vector<BsParams>& right);

/// Parameter-level conclusion for stable orbit equivalence of the
/// corresponding products; same verdict as product_isomorphic.
IsoVerdict soe_conclusion(const std::vector<BsParams>& left, const std::vector<BsParams>& right);

/// Parses "(2,3)x(-4,4)" into raw pairs. Throws ParseError.
std::vector<RawPair> parse_product(std::string_view text);

}  // namespace bsgroup

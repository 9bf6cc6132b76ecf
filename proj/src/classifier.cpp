#include "bsgroup/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bsgroup/errors.hpp"
#include "bsgroup/invariants.hpp"

namespace bsgroup {

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::DiscreteSameOrder: return "discrete-same-order";
    case VerdictReason::DiscreteDifferentOrder: return "discrete-different-order";
    case VerdictReason::DiscretenessDiffers: return "discreteness-differs";
    case VerdictReason::ScaleSetDiffers: return "scale-set-differs";
    case VerdictReason::MinIndexDiffers: return "min-index-differs";
    case VerdictReason::SignDiffers: return "sign-differs";
    case VerdictReason::EqualParameters: return "equal-parameters";
    case VerdictReason::LengthMismatch: return "length-mismatch";
    case VerdictReason::NoMatching: return "no-matching";
    case VerdictReason::Matched: return "matched";
  }
  return "unknown";
}

bool bs_isomorphic(RawPair first, RawPair second) {
  if (first.first == 0 || first.second == 0 || second.first == 0 || second.second == 0) {
    throw InvalidParameters("Baumslag-Solitar parameters must be nonzero");
  }
  auto sorted = [](std::int64_t x, std::int64_t y) { return std::pair{std::min(x, y), std::max(x, y)}; };
  const auto lhs = sorted(first.first, first.second);
  for (std::int64_t eps : {1, -1}) {
    if (lhs == sorted(eps * second.first, eps * second.second)) return true;
  }
  return false;
}

namespace {

void require_hypothesis(const BsParams& p) {
  if (p.abs_m() < 2) {
    throw OutOfHypothesis("G" + p.to_string() + " is outside 2 <= |m| <= n (amenable case)");
  }
}

IsoVerdict verdict(bool iso, VerdictReason kind, std::string reason) {
  return {iso, std::nullopt, kind, std::move(reason)};
}

}  // namespace

IsoVerdict g_isomorphic(const BsParams& first, const BsParams& second) {
  require_hypothesis(first);
  require_hypothesis(second);
  const std::string lhs = "G" + first.to_string();
  const std::string rhs = "G" + second.to_string();

  if (first.discrete_completion() != second.discrete_completion()) {
    const std::string& discrete = first.discrete_completion() ? lhs : rhs;
    return verdict(false, VerdictReason::DiscretenessDiffers,
                   discrete + " is discrete, the other completion is not");
  }

  if (first.discrete_completion()) {
    if (first.abs_m() == second.abs_m()) {
      return verdict(true, VerdictReason::DiscreteSameOrder,
                     "both are Z/" + std::to_string(first.abs_m()) + "Z * Z");
    }
    return verdict(false, VerdictReason::DiscreteDifferentOrder,
                   "largest finite element orders " + std::to_string(first.abs_m()) + " and " +
                       std::to_string(second.abs_m()) + " differ");
  }

  const ScaleSet s1 = scale_set(first);
  const ScaleSet s2 = scale_set(second);
  if (!(s1 == s2)) {
    return verdict(false, VerdictReason::ScaleSetDiffers,
                   "scale sets generated by (" + std::to_string(s1.m0) + "," + std::to_string(s1.n0) +
                       ") and (" + std::to_string(s2.m0) + "," + std::to_string(s2.n0) + ") differ");
  }
  if (first.abs_m() != second.abs_m()) {
    return verdict(false, VerdictReason::MinIndexDiffers,
                   "minimal indices |m| = " + std::to_string(first.abs_m()) + " and " +
                       std::to_string(second.abs_m()) + " differ");
  }
  if (first.m() != second.m()) {
    return verdict(false, VerdictReason::SignDiffers,
                   lhs + " and " + rhs + " differ only in the sign of m");
  }
  return verdict(true, VerdictReason::EqualParameters, lhs + " and " + rhs + " have equal parameters");
}

IsoVerdict product_isomorphic(const std::vector<BsParams>& left, const std::vector<BsParams>& right) {
  for (const auto& p : left) require_hypothesis(p);
  for (const auto& p : right) require_hypothesis(p);

  if (left.size() != right.size()) {
    return verdict(false, VerdictReason::LengthMismatch,
                   "products have " + std::to_string(left.size()) + " and " +
                       std::to_string(right.size()) + " factors");
  }

  std::vector<bool> used(right.size(), false);
  std::vector<std::size_t> sigma;
  sigma.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < right.size() && !match; ++j) {
      if (!used[j] && g_isomorphic(left[i], right[j]).isomorphic) match = j;
    }
    if (!match) {
      return verdict(false, VerdictReason::NoMatching,
                     "left factor " + std::to_string(i + 1) + " G" + left[i].to_string() +
                         " has no unmatched isomorphic factor on the right");
    }
    used[*match] = true;
    sigma.push_back(*match + 1);
  }

  std::string reason = "factor-wise isomorphism:";
  for (std::size_t i = 0; i < left.size(); ++i) {
    reason += " G" + left[i].to_string() + "->G" + right[sigma[i] - 1].to_string();
  }
  return {true, std::move(sigma), VerdictReason::Matched, std::move(reason)};
}

IsoVerdict soe_conclusion(const std::vector<BsParams>& left, const std::vector<BsParams>& right) {
  IsoVerdict v = product_isomorphic(left, right);
  v.reason += "; stable orbit equivalence reduces to isomorphism of the relative profinite "
              "completions of the products, decided factor-wise";
  return v;
}

std::vector<RawPair> parse_product(std::string_view text) {
  std::vector<RawPair> factors;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip_spaces();
    std::int64_t value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    if (begin != end && *begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected an integer", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  skip_spaces();
  if (pos == text.size()) throw ParseError("empty product", pos);
  while (true) {
    expect('(');
    const std::int64_t m = integer();
    expect(',');
    const std::int64_t n = integer();
    expect(')');
    factors.emplace_back(m, n);
    skip_spaces();
    if (pos == text.size()) break;
    expect('x');
  }
  return factors;
}

}  // namespace bsgroup

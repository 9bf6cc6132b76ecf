#include "bsgroup/word.hpp"

namespace bsgroup {

namespace {

// t^outer a^x t^-outer collapses into <a> exactly when the divisibility holds.
bool pinch_condition(int outer_sign, const BigInt& x, const BsParams& params) {
  return outer_sign > 0 ? x % params.m() == 0 : x % params.n() == 0;
}

}  // namespace

bool has_pinch(const Word& w) {
  const auto& syl = w.syllables();
  int last_t_sign = 0;
  BigInt between = 0;
  for (const auto& s : syl) {
    if (s.letter == Letter::A) {
      between += s.exponent;
      continue;
    }
    const int first_sign = sign(s.exponent);
    if (last_t_sign == -first_sign && pinch_condition(last_t_sign, between, w.params())) return true;
    last_t_sign = first_sign;
    between = 0;
  }
  return false;
}

Word britton_reduce(const Word& w) {
  const BsParams& params = w.params();
  // Pinch-free, freely reduced prefix of the result.
  std::vector<Syllable> out;

  auto push_a = [&out](const BigInt& k) {
    if (k == 0) return;
    if (!out.empty() && out.back().letter == Letter::A) {
      out.back().exponent += k;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back({Letter::A, k});
    }
  };

  for (const auto& s : w.syllables()) {
    if (s.letter == Letter::A) {
      push_a(s.exponent);
      continue;
    }
    BigInt remaining = s.exponent;
    while (remaining != 0) {
      const int incoming = sign(remaining);
      // Locate "t^prev a^x" at the end of the output.
      std::size_t t_index = out.size();
      BigInt x = 0;
      if (!out.empty() && out.back().letter == Letter::A) {
        x = out.back().exponent;
        if (out.size() >= 2) t_index = out.size() - 2;
      } else if (!out.empty()) {
        t_index = out.size() - 1;
      }

      const bool pinch = t_index < out.size() && sign(out[t_index].exponent) == -incoming &&
                         pinch_condition(-incoming, x, params);
      if (!pinch) {
        if (!out.empty() && out.back().letter == Letter::T) {
          // Same sign here, otherwise x = 0 would have been a pinch.
          out.back().exponent += remaining;
        } else {
          out.push_back({Letter::T, remaining});
        }
        break;
      }

      const BigInt image = -incoming > 0 ? BigInt(params.n() * (x / params.m()))
                                         : BigInt(params.m() * (x / params.n()));
      if (out.back().letter == Letter::A) out.pop_back();
      out.back().exponent += incoming;
      if (out.back().exponent == 0) out.pop_back();
      push_a(image);
      remaining -= incoming;
    }
  }

  Word result(params);
  for (const auto& s : out) result.push_back(s.letter, s.exponent);
  return result;
}

}  // namespace bsgroup

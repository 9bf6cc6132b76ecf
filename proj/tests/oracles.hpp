#pragma once

// Test-only reference computations. Nothing here calls the normal-form or
// tree code paths it is used to check.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bsgroup/word.hpp"

namespace bsgroup::testing {

/// Image of BS(m,n) in the affine group of Z/N: a -> x+1, t -> u x with
/// u = n m^-1 mod N. Requires gcd(m, N) = gcd(n, N) = 1. The relation holds
/// since u(u^-1 x + m) = x + n. Equal words have equal images.
class AffineQuotient {
 public:
  struct Map {
    std::int64_t mult = 1;
    std::int64_t add = 0;
    friend bool operator==(const Map&, const Map&) = default;
  };

  AffineQuotient(const BsParams& p, std::int64_t modulus) : modulus_(modulus) {
    const std::int64_t m_inv = inverse(mod(p.m()));
    u_ = mod(mod(p.n()) * m_inv);
    u_inv_ = inverse(u_);
  }

  Map image(const Word& w) const {
    Map result;
    for (const auto& s : w.syllables()) {
      Map step;
      if (s.letter == Letter::A) {
        step.add = mod(BigInt(s.exponent % modulus_).convert_to<std::int64_t>());
      } else {
        const BigInt e = abs(s.exponent);
        step.mult = power(s.exponent > 0 ? u_ : u_inv_, e);
      }
      result = compose(result, step);
    }
    return result;
  }

  bool is_identity(const Word& w) const { return image(w) == Map{}; }

  static bool usable(const BsParams& p, std::int64_t modulus) {
    return std::gcd(p.abs_m(), modulus) == 1 && std::gcd(p.n(), modulus) == 1;
  }

 private:
  std::int64_t mod(std::int64_t x) const { return ((x % modulus_) + modulus_) % modulus_; }

  // f o g
  Map compose(const Map& f, const Map& g) const {
    return {mod(f.mult * g.mult), mod(f.mult * g.add + f.add)};
  }

  std::int64_t power(std::int64_t base, BigInt e) const {
    std::int64_t result = 1 % modulus_;
    base = mod(base);
    while (e > 0) {
      if ((e & 1) != 0) result = mod(result * base);
      base = mod(base * base);
      e >>= 1;
    }
    return result;
  }

  std::int64_t inverse(std::int64_t x) const {
    for (std::int64_t y = 1; y < modulus_; ++y)
      if (mod(x * y) == 1) return y;
    return 1 % modulus_;
  }

  std::int64_t modulus_;
  std::int64_t u_ = 1;
  std::int64_t u_inv_ = 1;
};

/// Moduli coprime to m and n, for use with AffineQuotient.
inline std::vector<std::int64_t> affine_moduli(const BsParams& p) {
  std::vector<std::int64_t> result;
  for (std::int64_t N : {5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 37, 41, 43, 49, 53})
    if (AffineQuotient::usable(p, N)) result.push_back(N);
  return result;
}

/// Number of vertices within distance r of a point in the D-regular tree.
inline std::uint64_t regular_ball_size(std::uint64_t degree, int radius) {
  std::uint64_t total = 1;
  std::uint64_t layer = 1;
  for (int i = 1; i <= radius; ++i) {
    layer *= (i == 1 ? degree : degree - 1);
    total += layer;
  }
  return total;
}

/// Coset equality u<a> = v<a> decided by Britton reduction of u^-1 v.
inline bool same_a_coset(const Word& u, const Word& v) {
  return !britton_reduce(multiply(invert(u), v)).has_t();
}

/// Random freely reduced word with at most `max_syllables` syllables and
/// exponents in [-max_exp, max_exp].
inline Word random_word(const BsParams& p, std::mt19937_64& rng, int max_syllables, int max_exp) {
  std::uniform_int_distribution<int> count(0, max_syllables);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::bernoulli_distribution coin(0.5);
  Word w(p);
  Letter letter = coin(rng) ? Letter::A : Letter::T;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    int e = 0;
    while (e == 0) e = exp(rng);
    w.push_back(letter, e);
    letter = letter == Letter::A ? Letter::T : Letter::A;
  }
  return w;
}

/// Random nonempty word with at least one t-syllable and no pinch, built
/// syllable by syllable so that every a-power between opposite t-letters
/// avoids the associated subgroup.
inline Word random_pinch_free_word(const BsParams& p, std::mt19937_64& rng, int max_t_syllables,
                                   int max_exp) {
  std::uniform_int_distribution<int> count(1, max_t_syllables);
  std::uniform_int_distribution<int> texp(1, 3);
  std::uniform_int_distribution<int> aexp(-max_exp, max_exp);
  std::bernoulli_distribution coin(0.5);

  std::vector<Syllable> syl;
  if (coin(rng)) {
    int e = 0;
    while (e == 0) e = aexp(rng);
    syl.push_back({Letter::A, e});
  }
  const int k = count(rng);
  int previous_sign = 0;
  for (int i = 0; i < k; ++i) {
    const int s = coin(rng) ? 1 : -1;
    if (previous_sign != 0) {
      const std::int64_t modulus = previous_sign > 0 ? p.abs_m() : p.n();
      int e = 0;
      while (e == 0 || (previous_sign == -s && e % modulus == 0)) e = aexp(rng);
      syl.push_back({Letter::A, e});
    }
    syl.push_back({Letter::T, s * texp(rng)});
    previous_sign = s;
  }
  if (coin(rng)) {
    int e = 0;
    while (e == 0) e = aexp(rng);
    syl.push_back({Letter::A, e});
  }
  return Word(p, syl);
}

inline const std::vector<BsParams>& standard_params() {
  static const std::vector<BsParams> params{make_params(2, 3), make_params(2, 4), make_params(3, 6),
                                            make_params(-2, 3), make_params(2, 2)};
  return params;
}

}  // namespace bsgroup::testing

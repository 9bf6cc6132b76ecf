#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsgroup/bigint.hpp"
#include "bsgroup/params.hpp"

namespace bsgroup {

enum class Letter { A, T };

struct Syllable {
  Letter letter;
  BigInt exponent;  // never zero

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// An element of BS(m, n) written as alternating a- and t-powers.
///
/// The stored syllable list is always freely reduced: adjacent syllables have
/// distinct letters and no exponent is zero. The empty list is the identity.
class Word {
 public:
  explicit Word(BsParams params) : params_(params) {}
  /// Free-reduces the given syllables; zero exponents are dropped.
  Word(BsParams params, const std::vector<Syllable>& syllables);

  static Word a(BsParams params, const BigInt& exponent = 1);
  static Word t(BsParams params, const BigInt& exponent = 1);

  const BsParams& params() const { return params_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }

  /// Number of t-letters counted with multiplicity.
  BigInt t_length() const;
  BigInt t_exponent_sum() const;
  bool has_t() const;

  /// Appends a single syllable, merging and cancelling as needed.
  void push_back(Letter letter, const BigInt& exponent);

  /// Minimal serialisation, e.g. "a^3 t^-1 a^2"; the identity is "".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  BsParams params_;
  std::vector<Syllable> syllables_;
};

/// Parses the word grammar: tokens `a` or `t`, optionally `^<signed int>`,
/// separated by spaces. Throws ParseError with the offending position.
Word parse_word(std::string_view text, BsParams params);

/// Concatenation followed by free reduction. Throws ParamsMismatch.
Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

/// True iff w contains t^e a^x t^-e with m | x (e = +1) or n | x (e = -1).
/// A t-syllable of magnitude > 1 counts as that many letters.
bool has_pinch(const Word& w);

/// Removes all pinches by rewriting t a^(mk) t^-1 -> a^(nk) and
/// t^-1 a^(nk) t -> a^(mk), leftmost-innermost. The result is freely reduced
/// and pinch-free.
Word britton_reduce(const Word& w);

bool is_identity(const Word& w);
bool are_equal(const Word& u, const Word& v);

/// Exponent of t a^k t^-1 (direction +1) or t^-1 a^k t (direction -1) when it
/// lies in <a>; nullopt otherwise.
std::optional<BigInt> conjugate_by_t(const BigInt& k, int direction, const BsParams& params);

}  // namespace bsgroup

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bsgroup/bigint.hpp"
#include "bsgroup/params.hpp"
#include "bsgroup/word.hpp"

namespace bsgroup {

/// One step a^residue t^t_sign of a normal form. The residue lies in
/// {0,...,n-1} before t and in {0,...,|m|-1} before t^-1.
struct PrefixEntry {
  int t_sign;
  std::int64_t residue;

  friend auto operator<=>(const PrefixEntry&, const PrefixEntry&) = default;
};

/// Canonical form a^r1 t^e1 a^r2 t^e2 ... a^rk t^ek a^tail of an element.
///
/// Built left to right: each a-power is split into a transversal residue and
/// a multiple of |m| or n that is pushed through the following t-letter, and
/// pinches are collapsed as soon as they appear. Two elements are equal iff
/// their normal forms are identical as data.
class NormalForm {
 public:
  explicit NormalForm(BsParams params) : params_(params) {}

  const BsParams& params() const { return params_; }
  const std::vector<PrefixEntry>& prefix() const { return prefix_; }
  const BigInt& tail() const { return tail_; }
  /// Number of t-letters; equals the tree distance of g<a> from <a>.
  std::size_t t_length() const { return prefix_.size(); }
  bool is_identity() const { return prefix_.empty() && tail_ == 0; }

  void append_a(const BigInt& k) { tail_ += k; }
  void append_t(int sign);
  void append(const Word& w);
  void append(const NormalForm& other);

  /// Replaces the trailing a-power. Any value keeps the form canonical.
  void set_tail(BigInt tail) { tail_ = std::move(tail); }

  Word to_word() const;
  std::string to_string() const { return to_word().to_string(); }

  friend bool operator==(const NormalForm& x, const NormalForm& y) {
    return x.params_ == y.params_ && x.prefix_ == y.prefix_ && x.tail_ == y.tail_;
  }
  friend std::strong_ordering operator<=>(const NormalForm& x, const NormalForm& y);

 private:
  BsParams params_;
  std::vector<PrefixEntry> prefix_;
  BigInt tail_ = 0;
};

NormalForm normal_form(const Word& w);

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const;
};

}  // namespace bsgroup

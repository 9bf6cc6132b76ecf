#pragma once

#include <cstdint>
#include <string>

namespace bsgroup {

/// Parameters (m, n) of BS(m, n) = <a, t | t a^m t^-1 = a^n>, normalised to
/// 1 <= |m| <= n. The pairs (m,n), (n,m), (-m,-n), (-n,-m) give isomorphic
/// groups, so every nonzero pair has exactly one normalised representative.
class BsParams {
 public:
  /// Throws InvalidParameters if either entry is zero.
  static BsParams make(std::int64_t m, std::int64_t n);

  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::int64_t abs_m() const { return m_ < 0 ? -m_ : m_; }
  std::int64_t d() const { return d_; }
  std::int64_t m0() const { return abs_m() / d_; }
  std::int64_t n0() const { return n_ / d_; }
  bool amenable() const { return abs_m() == 1; }
  bool discrete_completion() const { return abs_m() == n_; }

  std::string to_string() const;

  friend bool operator==(const BsParams&, const BsParams&) = default;

 private:
  BsParams(std::int64_t m, std::int64_t n, std::int64_t d) : m_(m), n_(n), d_(d) {}

  std::int64_t m_;
  std::int64_t n_;
  std::int64_t d_;
};

inline BsParams make_params(std::int64_t m, std::int64_t n) { return BsParams::make(m, n); }

}  // namespace bsgroup

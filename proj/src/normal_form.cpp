#include "bsgroup/normal_form.hpp"

#include <functional>

namespace bsgroup {

void NormalForm::append_t(int sign) {
  const BigInt m = params_.m();
  const BigInt n = params_.n();

  if (!prefix_.empty() && prefix_.back().t_sign == -sign) {
    // t^s a^tail t^-s is a pinch when the tail lies in the associated subgroup.
    const bool pinch = sign < 0 ? tail_ % m == 0 : tail_ % n == 0;
    if (pinch) {
      BigInt image = sign < 0 ? BigInt(n * (tail_ / m)) : BigInt(m * (tail_ / n));
      tail_ = prefix_.back().residue + image;
      prefix_.pop_back();
      return;
    }
  }

  // a^(qn) t = t a^(qm) and a^(q|m|) t^-1 = t^-1 a^(q sgn(m) n).
  if (sign > 0) {
    auto [q, r] = floor_divmod(tail_, n);
    prefix_.push_back({+1, r.convert_to<std::int64_t>()});
    tail_ = q * m;
  } else {
    auto [q, r] = floor_divmod(tail_, BigInt(params_.abs_m()));
    prefix_.push_back({-1, r.convert_to<std::int64_t>()});
    tail_ = params_.m() < 0 ? BigInt(-q * n) : BigInt(q * n);
  }
}

void NormalForm::append(const Word& w) {
  for (const auto& s : w.syllables()) {
    if (s.letter == Letter::A) {
      append_a(s.exponent);
      continue;
    }
    const int sgn = sign(s.exponent);
    for (BigInt i = abs(s.exponent); i > 0; --i) append_t(sgn);
  }
}

void NormalForm::append(const NormalForm& other) {
  for (const auto& e : other.prefix_) {
    append_a(e.residue);
    append_t(e.t_sign);
  }
  append_a(other.tail_);
}

Word NormalForm::to_word() const {
  Word w(params_);
  for (const auto& e : prefix_) {
    w.push_back(Letter::A, e.residue);
    w.push_back(Letter::T, e.t_sign);
  }
  w.push_back(Letter::A, tail_);
  return w;
}

std::strong_ordering operator<=>(const NormalForm& x, const NormalForm& y) {
  if (auto c = x.prefix_.size() <=> y.prefix_.size(); c != 0) return c;
  if (auto c = x.prefix_ <=> y.prefix_; c != 0) return c;
  if (x.tail_ < y.tail_) return std::strong_ordering::less;
  if (y.tail_ < x.tail_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NormalForm normal_form(const Word& w) {
  NormalForm nf(w.params());
  nf.append(w);
  return nf;
}

std::size_t NormalFormHash::operator()(const NormalForm& nf) const {
  std::size_t h = std::hash<std::size_t>{}(nf.prefix().size());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& e : nf.prefix()) {
    mix(std::hash<std::int64_t>{}(e.residue * 2 + (e.t_sign > 0 ? 1 : 0)));
  }
  mix(std::hash<std::string>{}(nf.tail().str()));
  return h;
}

}  // namespace bsgroup

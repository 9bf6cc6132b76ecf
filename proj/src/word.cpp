#include "bsgroup/word.hpp"

#include "bsgroup/errors.hpp"

namespace bsgroup {

Word::Word(BsParams params, const std::vector<Syllable>& syllables) : params_(params) {
  for (const auto& s : syllables) push_back(s.letter, s.exponent);
}

Word Word::a(BsParams params, const BigInt& exponent) {
  Word w(params);
  w.push_back(Letter::A, exponent);
  return w;
}

Word Word::t(BsParams params, const BigInt& exponent) {
  Word w(params);
  w.push_back(Letter::T, exponent);
  return w;
}

void Word::push_back(Letter letter, const BigInt& exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().letter == letter) {
    syllables_.back().exponent += exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({letter, exponent});
}

BigInt Word::t_length() const {
  BigInt total = 0;
  for (const auto& s : syllables_)
    if (s.letter == Letter::T) total += abs(s.exponent);
  return total;
}

BigInt Word::t_exponent_sum() const {
  BigInt total = 0;
  for (const auto& s : syllables_)
    if (s.letter == Letter::T) total += s.exponent;
  return total;
}

bool Word::has_t() const {
  for (const auto& s : syllables_)
    if (s.letter == Letter::T) return true;
  return false;
}

std::string Word::to_string() const {
  std::string out;
  for (const auto& s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.letter == Letter::A ? 'a' : 't';
    if (s.exponent != 1) {
      out += '^';
      out += s.exponent.str();
    }
  }
  return out;
}

Word parse_word(std::string_view text, BsParams params) {
  Word w(params);
  std::size_t pos = 0;
  const std::size_t size = text.size();
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };

  while (pos < size) {
    while (pos < size && is_space(text[pos])) ++pos;
    if (pos == size) break;

    const char c = text[pos];
    if (c != 'a' && c != 't') throw ParseError(std::string("unexpected character '") + c + "'", pos);
    const Letter letter = c == 'a' ? Letter::A : Letter::T;
    ++pos;

    BigInt exponent = 1;
    if (pos < size && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      while (pos < size && !is_space(text[pos])) ++pos;
      auto parsed = parse_bigint(text.substr(start, pos - start));
      if (!parsed) throw ParseError("malformed exponent", start);
      if (*parsed == 0) throw ParseError("zero exponent", start);
      exponent = std::move(*parsed);
    } else if (pos < size && !is_space(text[pos])) {
      throw ParseError("tokens must be separated by spaces", pos);
    }
    w.push_back(letter, exponent);
  }
  return w;
}

namespace {

void require_same_params(const Word& u, const Word& v) {
  if (!(u.params() == v.params())) {
    throw ParamsMismatch("words over " + u.params().to_string() + " and " + v.params().to_string());
  }
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
  require_same_params(u, v);
  Word result = u;
  for (const auto& s : v.syllables()) result.push_back(s.letter, s.exponent);
  return result;
}

Word invert(const Word& w) {
  Word result(w.params());
  const auto& syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) result.push_back(it->letter, -it->exponent);
  return result;
}

std::optional<BigInt> conjugate_by_t(const BigInt& k, int direction, const BsParams& params) {
  const BigInt m = params.m();
  const BigInt n = params.n();
  if (direction > 0) {
    if (k % m != 0) return std::nullopt;
    return BigInt(n * (k / m));
  }
  if (k % n != 0) return std::nullopt;
  return BigInt(m * (k / n));
}

bool is_identity(const Word& w) { return britton_reduce(w).empty(); }

bool are_equal(const Word& u, const Word& v) {
  require_same_params(u, v);
  return is_identity(multiply(u, invert(v)));
}

}  // namespace bsgroup

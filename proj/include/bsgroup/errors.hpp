#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bsgroup {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class ParamsMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A ball, orbit or exponent search ran into its configured bound.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_cap, std::uint64_t cap)
      : Error(what_cap + " cap of " + std::to_string(cap) + " exceeded"),
        which_(std::move(what_cap)),
        cap_(cap) {}

  const std::string& which() const { return which_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::string which_;
  std::uint64_t cap_;
};

// Classification theorems assume 2 <= |m| <= n.
class OutOfHypothesis : public Error {
 public:
  using Error::Error;
};

}  // namespace bsgroup

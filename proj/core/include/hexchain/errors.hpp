#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hexchain {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A code word contained a character outside {O, M, P}.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}

  // 1-based index of the offending character, 0 when not tied to one.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Explicit chain length disagrees with the code word length.
class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (n < 1, k < 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact 64-bit arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

// A value that must be an exact multiple was not, e.g. a Wiener index that
// cannot belong to any spiro chain of the given length.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Exhaustive work was requested beyond the configured chain length limit.
class LimitExceededError : public Error {
 public:
  LimitExceededError(int requested, int limit)
      : Error("chain length " + std::to_string(requested) +
              " exceeds the exhaustive limit " + std::to_string(limit) +
              " (set HEXCHAIN_MAX_N to raise it)"),
        requested_(requested),
        limit_(limit) {}

  int requested() const noexcept { return requested_; }
  int limit() const noexcept { return limit_; }

 private:
  int requested_;
  int limit_;
};

}  // namespace hexchain

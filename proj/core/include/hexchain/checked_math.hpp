#pragma once

#include <cstdint>
#include <string>

#include "hexchain/errors.hpp"

// Overflow-checked int64 arithmetic. Every Wiener index computation goes
// through these so that large chains fail loudly instead of wrapping.
namespace hexchain::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " - " +
                        std::to_string(b));
  }
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("int64 overflow in " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

template <typename... Ts>
std::int64_t mul(std::int64_t a, std::int64_t b, Ts... rest) {
  return mul(mul(a, b), rest...);
}

// Divides and throws IntegrityError when the remainder is nonzero.
inline std::int64_t exact_div(std::int64_t num, std::int64_t den,
                              const char* what) {
  if (den == 0 || num % den != 0) {
    throw IntegrityError(std::string(what) + ": " + std::to_string(num) +
                         " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

}  // namespace hexchain::checked

#include "hexchain/code_word.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "hexchain/errors.hpp"

namespace hexchain {

char to_char(Letter x) noexcept {
  switch (x) {
    case Letter::O:
      return 'O';
    case Letter::M:
      return 'M';
    case Letter::P:
      return 'P';
  }
  return '?';
}

std::optional<Letter> letter_from_char(char c) noexcept {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'O':
      return Letter::O;
    case 'M':
      return Letter::M;
    case 'P':
      return Letter::P;
    default:
      return std::nullopt;
  }
}

CodeWord::CodeWord(std::vector<Letter> letters, int n)
    : letters_(std::move(letters)), n_(n) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
  const std::size_t expected = n <= 2 ? 0 : static_cast<std::size_t>(n - 2);
  if (letters_.size() != expected) {
    throw LengthMismatchError("a chain of length " + std::to_string(n) +
                              " needs a code of length " +
                              std::to_string(expected) + ", got " +
                              std::to_string(letters_.size()));
  }
}

CodeWord::CodeWord(std::vector<Letter> letters)
    : letters_(std::move(letters)),
      n_(static_cast<int>(letters_.size()) + 2) {}

CodeWord CodeWord::constant(Letter x, int n) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
  return CodeWord(std::vector<Letter>(n <= 2 ? 0 : n - 2, x), n);
}

CodeWord CodeWord::reversed() const {
  CodeWord out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

bool CodeWord::is_palindrome() const noexcept {
  return std::equal(letters_.begin(), letters_.begin() + letters_.size() / 2,
                    letters_.rbegin());
}

bool CodeWord::is_constant() const noexcept {
  return std::adjacent_find(letters_.begin(), letters_.end(),
                            std::not_equal_to<>()) == letters_.end();
}

std::string CodeWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter x : letters_) out.push_back(to_char(x));
  return out;
}

CodeWord parse_code(std::string_view text, std::optional<int> n) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto x = letter_from_char(text[i]);
    if (!x) {
      throw ParseError("invalid character '" + std::string(1, text[i]) +
                           "' at position " + std::to_string(i + 1) +
                           " (expected O, M or P)",
                       i + 1);
    }
    letters.push_back(*x);
  }
  if (!n) {
    if (letters.empty()) {
      throw LengthMismatchError(
          "an empty code needs an explicit chain length (1 or 2)");
    }
    return CodeWord(std::move(letters));
  }
  return CodeWord(std::move(letters), *n);
}

bool is_canonical(std::span<const Letter> letters) noexcept {
  const std::size_t len = letters.size();
  for (std::size_t i = 0; i < len / 2; ++i) {
    const Letter a = letters[i];
    const Letter b = letters[len - 1 - i];
    if (a != b) return a < b;
  }
  return true;
}

CodeWord canonicalize(const CodeWord& code) {
  return is_canonical(code.letters()) ? code : code.reversed();
}

CodeWord squeeze(const CodeWord& code) { return code; }

}  // namespace hexchain

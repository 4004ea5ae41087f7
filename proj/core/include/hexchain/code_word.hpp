#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hexchain {

// Position of the next cut vertex (or tail) relative to the hexagon's entry
// vertex. Enumerator order is the canonical letter order O < M < P.
enum class Letter : std::uint8_t { O = 0, M = 1, P = 2 };

inline constexpr Letter kAllLetters[] = {Letter::O, Letter::M, Letter::P};

// Ring distance 1/2/3 for ortho/meta/para.
constexpr int ring_distance(Letter x) noexcept {
  return static_cast<int>(x) + 1;
}

char to_char(Letter x) noexcept;
std::optional<Letter> letter_from_char(char c) noexcept;

// Identifies a hexagonal chain of length n by the positions of its n-2
// interior connections. For n <= 2 the word is empty and n is stored
// explicitly, since the letters alone cannot tell n = 1 from n = 2.
class CodeWord {
 public:
  // Single hexagon.
  CodeWord() = default;

  // Throws DomainError if n < 1 and LengthMismatchError if
  // letters.size() != max(n - 2, 0).
  CodeWord(std::vector<Letter> letters, int n);

  // n inferred as letters.size() + 2; an empty vector gives n = 2.
  explicit CodeWord(std::vector<Letter> letters);

  // All-x code for a chain of length n.
  static CodeWord constant(Letter x, int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

  // Letter classifying cut vertex c_k (or tail t_k), 2 <= k <= n-1.
  Letter letter_for(int k) const noexcept {
    return letters_[static_cast<std::size_t>(k - 2)];
  }

  CodeWord reversed() const;
  bool is_palindrome() const noexcept;
  // True when every letter is equal (vacuously for n <= 2).
  bool is_constant() const noexcept;

  std::string to_string() const;

  // Shorter chains first, then lexicographic under O < M < P.
  friend auto operator<=>(const CodeWord& a, const CodeWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const CodeWord&, const CodeWord&) = default;

 private:
  std::vector<Letter> letters_;
  int n_ = 1;
};

// Parses a code word; lowercase letters are accepted. When n is absent it is
// inferred as text.size() + 2, and an empty text must carry n explicitly.
CodeWord parse_code(std::string_view text, std::optional<int> n = std::nullopt);

// Lexicographically smaller of the code and its reversal.
CodeWord canonicalize(const CodeWord& code);

bool is_canonical(std::span<const Letter> letters) noexcept;

// A polyphenyl chain and its hexagonal squeeze carry the same code word, so
// this is the identity. The graph-level counterpart is squeeze_graph().
CodeWord squeeze(const CodeWord& code);

}  // namespace hexchain

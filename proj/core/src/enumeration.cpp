#include "hexchain/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <thread>

#include "hexchain/checked_math.hpp"
#include "hexchain/errors.hpp"
#include "hexchain/wiener.hpp"

namespace hexchain {

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  const char* raw = std::getenv("HEXCHAIN_MAX_N");
  if (raw == nullptr || *raw == '\0') return limits;
  const std::string_view text(raw);
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1) {
    throw DomainError("HEXCHAIN_MAX_N must be a positive integer, got '" +
                      std::string(text) + "'");
  }
  limits.max_n = value;
  return limits;
}

namespace {

std::uint64_t pow3(int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, std::uint64_t{3}, &out)) {
      throw OverflowError("3^" + std::to_string(exponent) +
                          " does not fit in 64 bits");
    }
  }
  return out;
}

void check_enumerable(int n, const EnumerationLimits& limits) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
  if (n > limits.max_n) throw LimitExceededError(n, limits.max_n);
}

// Advances a base-3 word to its lexicographic successor; false on wrap.
bool next_word(std::span<Letter> word) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] != Letter::P) {
      word[i] = static_cast<Letter>(static_cast<int>(word[i]) + 1);
      return true;
    }
    word[i] = Letter::O;
  }
  return false;
}

// Visits every canonical word of `length` letters that starts with the given
// prefix, in lexicographic order.
template <typename Visit>
void scan_partition(int n, std::span<const Letter> prefix, Visit&& visit) {
  const std::size_t length = n <= 2 ? 0 : static_cast<std::size_t>(n - 2);
  std::vector<Letter> word(length, Letter::O);
  std::copy(prefix.begin(), prefix.end(), word.begin());
  std::span<Letter> suffix(word.begin() + static_cast<std::ptrdiff_t>(prefix.size()),
                           word.end());
  do {
    if (is_canonical(word)) visit(CodeWord(word, n));
  } while (next_word(suffix));
}

// All prefixes of the given length in lexicographic order.
std::vector<std::vector<Letter>> prefixes(std::size_t length) {
  std::vector<std::vector<Letter>> out;
  std::vector<Letter> prefix(length, Letter::O);
  do {
    out.push_back(prefix);
  } while (next_word(prefix));
  return out;
}

unsigned worker_count(const EnumerationLimits& limits) {
  if (limits.workers != 0) return limits.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits the code space by fixed two-letter prefixes, maps every canonical
// code through `fn` on worker threads, and concatenates the partitions in
// prefix order so the result matches sequential enumeration.
template <typename T, typename Fn>
std::vector<T> parallel_collect(int n, const EnumerationLimits& limits, Fn fn) {
  check_enumerable(n, limits);
  const std::size_t length = n <= 2 ? 0 : static_cast<std::size_t>(n - 2);
  const auto parts = prefixes(std::min<std::size_t>(length, 2));
  std::vector<std::vector<T>> results(parts.size());

  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < parts.size(); i += stride) {
      scan_partition(n, parts[i],
                     [&](const CodeWord& code) { results[i].push_back(fn(code)); });
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(worker_count(limits), parts.size());
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w, workers);
  }

  std::vector<T> out;
  std::size_t total = 0;
  for (const auto& r : results) total += r.size();
  out.reserve(total);
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ChainCensus count_chains(int n) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
  ChainCensus census;
  census.n = n;
  if (n <= 2) return census;
  census.total_codes = pow3(n - 2);
  census.palindromic = pow3((n - 1) / 2);
  // total + palindromic < 2^64 whenever total fits
  census.distinct = (census.total_codes + census.palindromic) / 2;
  return census;
}

void for_each_chain(int n, const EnumerationLimits& limits,
                    const std::function<void(const CodeWord&)>& visit) {
  check_enumerable(n, limits);
  scan_partition(n, std::span<const Letter>{}, visit);
}

std::vector<CodeWord> enumerate_chains(int n, const EnumerationLimits& limits) {
  return parallel_collect<CodeWord>(n, limits,
                                    [](const CodeWord& code) { return code; });
}

std::vector<ChainValue> evaluate_chains(ChainKind kind, int n,
                                        const EnumerationLimits& limits) {
  return parallel_collect<ChainValue>(n, limits, [kind](const CodeWord& code) {
    return ChainValue{code, wiener_closed(kind, code)};
  });
}

std::string_view to_string(Direction direction) noexcept {
  return direction == Direction::Min ? "min" : "max";
}

std::vector<RankedChain> ExtremalRanking::rank_group(int rank) const {
  std::vector<RankedChain> out;
  for (const auto& e : entries) {
    if (e.rank == rank) out.push_back(e);
  }
  return out;
}

ExtremalRanking rank_extremal(ChainKind kind, int n, Direction direction,
                              int top, const EnumerationLimits& limits) {
  if (n < 4) {
    throw DomainError("extremal ranking needs n >= 4, got " + std::to_string(n));
  }
  if (top < 1) {
    throw DomainError("top must be at least 1, got " + std::to_string(top));
  }
  auto values = evaluate_chains(kind, n, limits);
  std::sort(values.begin(), values.end(),
            [direction](const ChainValue& a, const ChainValue& b) {
              if (a.wiener != b.wiener) {
                return direction == Direction::Min ? a.wiener < b.wiener
                                                   : a.wiener > b.wiener;
              }
              return a.code < b.code;
            });

  ExtremalRanking ranking;
  ranking.kind = kind;
  ranking.n = n;
  ranking.direction = direction;
  int rank = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i == 0 || values[i].wiener != values[i - 1].wiener) ++rank;
    if (rank > top) break;
    ranking.entries.push_back({values[i].code, values[i].wiener, rank});
  }
  return ranking;
}

CodeWord predicted_extremal(int n, Direction direction, int rank) {
  if (n < 4) {
    throw DomainError("extremal characterisation needs n >= 4, got " +
                      std::to_string(n));
  }
  if (rank < 1 || rank > 3) {
    throw DomainError("only ranks 1 to 3 are characterised, got " +
                      std::to_string(rank));
  }
  const Letter fill = direction == Direction::Min ? Letter::O : Letter::P;
  std::vector<Letter> letters(static_cast<std::size_t>(n - 2), fill);
  if (rank == 2) {
    letters.back() = Letter::M;
  } else if (rank == 3) {
    letters[letters.size() - 2] = Letter::M;
  }
  return canonicalize(CodeWord(std::move(letters), n));
}

std::vector<RankVerdict> check_against_theorem(const ExtremalRanking& ranking) {
  std::vector<RankVerdict> out;
  for (int rank = 1; rank <= std::min(3, ranking.rank_count()); ++rank) {
    const auto group = ranking.rank_group(rank);
    const CodeWord expected = predicted_extremal(ranking.n, ranking.direction, rank);
    RankVerdict verdict;
    verdict.rank = rank;
    if (group.size() != 1) {
      verdict.note = std::to_string(group.size()) + " chains tie at rank " +
                     std::to_string(rank) + " (W = " +
                     std::to_string(group.front().wiener) + "):";
      for (const auto& e : group) verdict.note += " " + e.code.to_string();
      verdict.note += "; predicted unique " + expected.to_string();
    } else if (group.front().code != expected) {
      verdict.note = "predicted " + expected.to_string() + ", found " +
                     group.front().code.to_string();
    } else {
      verdict.matches_theorem = true;
    }
    out.push_back(std::move(verdict));
  }
  return out;
}

std::int64_t average_wiener(ChainKind kind, std::int64_t n) {
  if (n < 1) {
    throw DomainError("chain length must be at least 1, got " +
                      std::to_string(n));
  }
  using checked::add;
  using checked::mul;
  using checked::sub;
  const std::int64_t n2 = mul(n, n);
  const std::int64_t n3 = mul(n2, n);
  if (kind == ChainKind::Spiro) {
    // 25n^3 + 60n^2 - 4n = n^3 - n (mod 3), always a multiple of 3
    return checked::exact_div(sub(add(mul(25, n3), mul(60, n2)), mul(4, n)), 3,
                              "spiro average");
  }
  return sub(add(mul(18, n3), mul(18, n2)), mul(9, n));
}

ExhaustiveAverage exhaustive_average(ChainKind kind, int n,
                                     const EnumerationLimits& limits) {
  ExhaustiveAverage avg;
  for (const auto& v : evaluate_chains(kind, n, limits)) {
    ++avg.count;
    avg.sum = checked::add(avg.sum, v.wiener);
  }
  return avg;
}

}  // namespace hexchain

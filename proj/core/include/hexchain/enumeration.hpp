#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hexchain/chain_graph.hpp"
#include "hexchain/code_word.hpp"

namespace hexchain {

struct EnumerationLimits {
  static constexpr int kDefaultMaxN = 14;

  // Largest chain length that may be enumerated exhaustively.
  int max_n = kDefaultMaxN;
  // Worker threads for partitioned enumeration; 0 means hardware concurrency.
  unsigned workers = 0;

  // Defaults, with max_n taken from HEXCHAIN_MAX_N when set.
  static EnumerationLimits from_environment();
};

// Number of distinct chains of length n: a palindromic code names its chain
// alone, every other chain is named by a code and its reversal.
struct ChainCensus {
  int n = 1;
  std::uint64_t total_codes = 1;  // 3^(n-2)
  std::uint64_t palindromic = 1;  // 3^floor((n-1)/2)
  std::uint64_t distinct = 1;     // (total_codes + palindromic) / 2
};

// Throws OverflowError once 3^(n-2) no longer fits 64 bits (n > 42). Chains
// of length 1 and 2 are counted as one each.
ChainCensus count_chains(int n);

// Streams every distinct chain of length n once, as its canonical code, in
// lexicographic order. Runs on the calling thread.
void for_each_chain(int n, const EnumerationLimits& limits,
                    const std::function<void(const CodeWord&)>& visit);

// Same set and order as for_each_chain, computed across worker threads.
std::vector<CodeWord> enumerate_chains(
    int n, const EnumerationLimits& limits = EnumerationLimits{});

struct ChainValue {
  CodeWord code;
  std::int64_t wiener = 0;
};

// Closed-form Wiener index of every distinct chain, in enumeration order.
std::vector<ChainValue> evaluate_chains(
    ChainKind kind, int n, const EnumerationLimits& limits = EnumerationLimits{});

enum class Direction : std::uint8_t { Min, Max };

std::string_view to_string(Direction direction) noexcept;

struct RankedChain {
  CodeWord code;
  std::int64_t wiener = 0;
  int rank = 0;  // dense: tied chains share a rank
};

struct ExtremalRanking {
  ChainKind kind = ChainKind::Spiro;
  int n = 0;
  Direction direction = Direction::Min;
  std::vector<RankedChain> entries;

  std::vector<RankedChain> rank_group(int rank) const;
  int rank_count() const noexcept {
    return entries.empty() ? 0 : entries.back().rank;
  }
};

// The `top` smallest or largest rank groups among all chains of length n
// (n >= 4). Ties are grouped, so more than `top` entries may come back.
ExtremalRanking rank_extremal(
    ChainKind kind, int n, Direction direction, int top,
    const EnumerationLimits& limits = EnumerationLimits{});

// Canonical code that the extremal characterisation prescribes for rank 1..3
// at length n >= 4. Minimum side: O..O, O..OM, O..OMO; maximum side: P..P,
// P..PM, P..PMP. The same codes are extremal for polyphenyl chains.
CodeWord predicted_extremal(int n, Direction direction, int rank);

struct RankVerdict {
  int rank = 0;
  bool matches_theorem = false;
  std::string note;
};

// For ranks 1..3 present in the ranking: the rank group must be the single
// predicted chain.
std::vector<RankVerdict> check_against_theorem(const ExtremalRanking& ranking);

// Mean Wiener index over all chains of length n, from the closed formulas
// (25n^3 + 60n^2 - 4n)/3 (spiro) and 18n^3 + 18n^2 - 9n (polyphenyl). Both
// equal the meta chain's index.
std::int64_t average_wiener(ChainKind kind, std::int64_t n);

struct ExhaustiveAverage {
  std::uint64_t count = 0;
  std::int64_t sum = 0;

  bool exact() const noexcept {
    return count != 0 && sum % static_cast<std::int64_t>(count) == 0;
  }
  // Truncated mean; check exact() first.
  std::int64_t mean() const noexcept {
    return count == 0 ? 0 : sum / static_cast<std::int64_t>(count);
  }
};

ExhaustiveAverage exhaustive_average(
    ChainKind kind, int n, const EnumerationLimits& limits = EnumerationLimits{});

}  // namespace hexchain

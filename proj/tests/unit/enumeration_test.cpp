#include "hexchain/enumeration.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "hexchain/errors.hpp"
#include "hexchain/wiener.hpp"
#include "support/oracles.hpp"

namespace hexchain {
namespace {

std::vector<std::string> as_strings(const std::vector<CodeWord>& codes) {
  std::vector<std::string> out;
  for (const auto& c : codes) out.push_back(c.to_string());
  return out;
}

TEST(EnumerateChainsTest, SmallLengths) {
  EXPECT_EQ(as_strings(enumerate_chains(3)),
            (std::vector<std::string>{"O", "M", "P"}));
  EXPECT_EQ(as_strings(enumerate_chains(4)),
            (std::vector<std::string>{"OO", "OM", "OP", "MM", "MP", "PP"}));
  const auto two = enumerate_chains(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_TRUE(two[0].empty());
  EXPECT_EQ(two[0].n(), 2);
  ASSERT_EQ(enumerate_chains(1).size(), 1u);
  EXPECT_EQ(enumerate_chains(1)[0].n(), 1);
}

TEST(EnumerateChainsTest, RefusesBeyondLimit) {
  try {
    enumerate_chains(15);
    FAIL() << "expected LimitExceededError";
  } catch (const LimitExceededError& e) {
    EXPECT_EQ(e.limit(), 14);
    EXPECT_EQ(e.requested(), 15);
    EXPECT_NE(std::string(e.what()).find("14"), std::string::npos);
  }
  EnumerationLimits tight;
  tight.max_n = 5;
  EXPECT_THROW(enumerate_chains(6, tight), LimitExceededError);
  EXPECT_THROW(enumerate_chains(0), DomainError);
}

TEST(EnumerateChainsTest, ParallelMatchesSequentialOrder) {
  for (int n = 1; n <= 10; ++n) {
    std::vector<CodeWord> sequential;
    for_each_chain(n, EnumerationLimits{},
                   [&](const CodeWord& c) { sequential.push_back(c); });
    EnumerationLimits one;
    one.workers = 1;
    EnumerationLimits four;
    four.workers = 4;
    EXPECT_EQ(enumerate_chains(n, one), sequential) << n;
    EXPECT_EQ(enumerate_chains(n, four), sequential) << n;
    EXPECT_TRUE(std::is_sorted(sequential.begin(), sequential.end())) << n;
  }
}

TEST(EnumerateChainsTest, MatchesBruteForceCanonicalSet) {
  for (int n = 1; n <= 12; ++n) {
    const auto expected = testing::canonical_set_by_brute_force(n);
    const auto codes = enumerate_chains(n);
    std::set<std::string> got;
    for (const auto& c : codes) {
      EXPECT_EQ(canonicalize(c), c);
      got.insert(c.to_string());
    }
    EXPECT_EQ(got.size(), codes.size()) << "duplicates at n=" << n;
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(LimitsTest, EnvironmentOverride) {
  ::setenv("HEXCHAIN_MAX_N", "9", 1);
  EXPECT_EQ(EnumerationLimits::from_environment().max_n, 9);
  ::setenv("HEXCHAIN_MAX_N", "nine", 1);
  EXPECT_THROW(EnumerationLimits::from_environment(), DomainError);
  ::unsetenv("HEXCHAIN_MAX_N");
  EXPECT_EQ(EnumerationLimits::from_environment().max_n,
            EnumerationLimits::kDefaultMaxN);
}

TEST(CountChainsTest, Examples) {
  EXPECT_EQ(count_chains(5).distinct, 18u);
  EXPECT_EQ(count_chains(6).distinct, 45u);
  EXPECT_EQ(count_chains(1).distinct, 1u);
  EXPECT_EQ(count_chains(2).distinct, 1u);
  EXPECT_EQ(count_chains(3).distinct, 3u);
  const ChainCensus c = count_chains(7);
  EXPECT_EQ(c.total_codes, 243u);
  EXPECT_EQ(c.palindromic, 27u);
  EXPECT_EQ(c.distinct, 135u);
}

TEST(CountChainsTest, OverflowBoundary) {
  EXPECT_NO_THROW(count_chains(42));
  EXPECT_THROW(count_chains(43), OverflowError);
  EXPECT_THROW(count_chains(0), DomainError);
}

TEST(RankExtremalTest, SpiroFiveMin) {
  const auto r = rank_extremal(ChainKind::Spiro, 5, Direction::Min, 3);
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[0].code.to_string(), "OOO");
  EXPECT_EQ(r.entries[0].wiener, 1285);
  EXPECT_EQ(r.entries[1].code.to_string(), "OOM");
  EXPECT_EQ(r.entries[1].wiener, 1360);
  EXPECT_EQ(r.entries[2].code.to_string(), "OMO");
  EXPECT_EQ(r.entries[2].wiener, 1385);
  for (const auto& v : check_against_theorem(r)) EXPECT_TRUE(v.matches_theorem);
}

TEST(RankExtremalTest, SpiroFourThirdPlaceTie) {
  const auto r = rank_extremal(ChainKind::Spiro, 4, Direction::Min, 3);
  ASSERT_EQ(r.entries.size(), 4u);
  const auto third = r.rank_group(3);
  ASSERT_EQ(third.size(), 2u);
  EXPECT_EQ(third[0].code.to_string(), "OP");
  EXPECT_EQ(third[1].code.to_string(), "MM");
  EXPECT_EQ(third[0].wiener, 848);
  EXPECT_EQ(third[1].wiener, 848);

  const auto verdicts = check_against_theorem(r);
  ASSERT_EQ(verdicts.size(), 3u);
  EXPECT_TRUE(verdicts[0].matches_theorem);
  EXPECT_TRUE(verdicts[1].matches_theorem);
  EXPECT_FALSE(verdicts[2].matches_theorem);
  EXPECT_NE(verdicts[2].note.find("tie"), std::string::npos);
}

TEST(RankExtremalTest, PolyphenylMax) {
  const auto r5 = rank_extremal(ChainKind::Polyphenyl, 5, Direction::Max, 1);
  ASSERT_EQ(r5.entries.size(), 1u);
  EXPECT_EQ(r5.entries[0].code.to_string(), "PPP");
  EXPECT_EQ(r5.entries[0].wiener, 3015);

  const auto r6 = rank_extremal(ChainKind::Polyphenyl, 6, Direction::Max, 1);
  EXPECT_EQ(r6.entries[0].code.to_string(), "PPPP");
  EXPECT_EQ(r6.entries[0].wiener, 5202);
}

TEST(RankExtremalTest, RejectsBadArguments) {
  EXPECT_THROW(rank_extremal(ChainKind::Spiro, 3, Direction::Min, 1), DomainError);
  EXPECT_THROW(rank_extremal(ChainKind::Spiro, 5, Direction::Min, 0), DomainError);
  EXPECT_THROW(rank_extremal(ChainKind::Spiro, 20, Direction::Min, 1),
               LimitExceededError);
}

TEST(PredictedExtremalTest, Codes) {
  EXPECT_EQ(predicted_extremal(6, Direction::Min, 1).to_string(), "OOOO");
  EXPECT_EQ(predicted_extremal(6, Direction::Min, 2).to_string(), "OOOM");
  EXPECT_EQ(predicted_extremal(6, Direction::Min, 3).to_string(), "OOMO");
  EXPECT_EQ(predicted_extremal(6, Direction::Max, 2).to_string(), "MPPP");
  EXPECT_EQ(predicted_extremal(6, Direction::Max, 3).to_string(), "PMPP");
  // At n = 4 the third-rank prescription coincides with the second.
  EXPECT_EQ(predicted_extremal(4, Direction::Min, 3).to_string(), "OM");
  EXPECT_THROW(predicted_extremal(3, Direction::Min, 1), DomainError);
  EXPECT_THROW(predicted_extremal(5, Direction::Min, 4), DomainError);
}

TEST(AverageWienerTest, Examples) {
  EXPECT_EQ(average_wiener(ChainKind::Spiro, 3), 401);
  EXPECT_EQ(average_wiener(ChainKind::Spiro, 4), 848);
  EXPECT_EQ(average_wiener(ChainKind::Polyphenyl, 4), 1404);
  EXPECT_EQ(squeeze_relation(4, 848), 1404);
  EXPECT_THROW(average_wiener(ChainKind::Spiro, 0), DomainError);
}

TEST(AverageWienerTest, ExhaustiveSumAtFour) {
  const ExhaustiveAverage avg = exhaustive_average(ChainKind::Spiro, 4);
  EXPECT_EQ(avg.count, 6u);
  EXPECT_EQ(avg.sum, 748 + 798 + 848 + 848 + 898 + 948);
  EXPECT_TRUE(avg.exact());
  EXPECT_EQ(avg.mean(), 848);
}

TEST(AverageWienerTest, ExhaustiveMatchesClosedForm) {
  for (ChainKind kind : {ChainKind::Spiro, ChainKind::Polyphenyl}) {
    for (int n = 3; n <= 10; ++n) {
      const ExhaustiveAverage avg = exhaustive_average(kind, n);
      EXPECT_EQ(avg.count, count_chains(n).distinct);
      ASSERT_TRUE(avg.exact()) << n;
      EXPECT_EQ(avg.mean(), average_wiener(kind, n)) << n;
    }
  }
}

}  // namespace
}  // namespace hexchain

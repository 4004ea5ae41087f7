#include "hexchain/code_word.hpp"

#include <gtest/gtest.h>

#include "hexchain/errors.hpp"

namespace hexchain {
namespace {

TEST(ParseCodeTest, InfersLengthFromLetters) {
  const CodeWord code = parse_code("PMMMO");
  EXPECT_EQ(code.size(), 5u);
  EXPECT_EQ(code.n(), 7);
  EXPECT_EQ(code.to_string(), "PMMMO");
}

TEST(ParseCodeTest, AcceptsLowercase) {
  EXPECT_EQ(parse_code("pmO").to_string(), "PMO");
}

TEST(ParseCodeTest, EmptyCodeCarriesExplicitLength) {
  EXPECT_EQ(parse_code("", 1).n(), 1);
  EXPECT_EQ(parse_code("", 2).n(), 2);
  EXPECT_TRUE(parse_code("", 1).empty());
  EXPECT_NE(parse_code("", 1), parse_code("", 2));
}

TEST(ParseCodeTest, EmptyCodeWithoutLengthIsRejected) {
  EXPECT_THROW(parse_code(""), LengthMismatchError);
}

TEST(ParseCodeTest, ReportsOffendingPosition) {
  try {
    parse_code("OMX");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
}

TEST(ParseCodeTest, LengthMismatch) {
  EXPECT_THROW(parse_code("OM", 5), LengthMismatchError);
  EXPECT_THROW(parse_code("O", 2), LengthMismatchError);
  EXPECT_THROW(parse_code("", 3), LengthMismatchError);
  EXPECT_NO_THROW(parse_code("OM", 4));
}

TEST(ParseCodeTest, NonPositiveLength) {
  EXPECT_THROW(parse_code("", 0), DomainError);
  EXPECT_THROW(CodeWord::constant(Letter::O, -3), DomainError);
}

TEST(CanonicalizeTest, Examples) {
  EXPECT_EQ(canonicalize(parse_code("PMMMO")).to_string(), "OMMMP");
  EXPECT_EQ(canonicalize(parse_code("MM")).to_string(), "MM");
  EXPECT_EQ(canonicalize(parse_code("PO")).to_string(), "OP");
  EXPECT_EQ(canonicalize(parse_code("", 1)), parse_code("", 1));
}

TEST(CanonicalizeTest, LetterOrderIsOrthoMetaPara) {
  // Plain ASCII would put M before O.
  EXPECT_EQ(canonicalize(parse_code("MO")).to_string(), "OM");
  EXPECT_EQ(canonicalize(parse_code("PM")).to_string(), "MP");
}

TEST(CodeWordTest, PalindromeAndConstant) {
  EXPECT_TRUE(parse_code("OMO").is_palindrome());
  EXPECT_FALSE(parse_code("OMM").is_palindrome());
  EXPECT_TRUE(parse_code("", 2).is_palindrome());
  EXPECT_TRUE(parse_code("PPP").is_constant());
  EXPECT_FALSE(parse_code("PPM").is_constant());
  EXPECT_TRUE(parse_code("", 1).is_constant());
}

TEST(CodeWordTest, ConstantFactory) {
  EXPECT_EQ(CodeWord::constant(Letter::M, 5).to_string(), "MMM");
  EXPECT_EQ(CodeWord::constant(Letter::P, 2).n(), 2);
  EXPECT_TRUE(CodeWord::constant(Letter::P, 1).empty());
}

TEST(CodeWordTest, LetterForIndexesCutVertices) {
  const CodeWord code = parse_code("PMO");
  EXPECT_EQ(code.letter_for(2), Letter::P);
  EXPECT_EQ(code.letter_for(4), Letter::O);
}

TEST(SqueezeTest, IsIdentityOnCodes) {
  EXPECT_EQ(squeeze(parse_code("PMMMO")), parse_code("PMMMO"));
  EXPECT_EQ(squeeze(parse_code("", 2)), parse_code("", 2));
}

}  // namespace
}  // namespace hexchain

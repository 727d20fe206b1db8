#include <gtest/gtest.h>

#include "cliff/expression.hpp"
#include "support.hpp"

using namespace cliff;
using namespace cliff::testing;

namespace {

const Signature kSig = Signature::pq(3, 1);

std::string rt(const std::string &text, const Signature &sig = kSig) {
  return print_expression(parse_expression<Rational>(text, sig));
}

} // namespace

TEST(Expression, PrintsCanonicalForm) {
  EXPECT_EQ(rt("e2*e1"), "-e1*e2");
  EXPECT_EQ(rt("T(e1*e2)"), "-e1*e2");
  EXPECT_EQ(rt("C(e1 + e1*e2)"), "-e1 + e1*e2");
  EXPECT_EQ(rt("H(e1*e2*e3)"), "e1*e2*e3");
  EXPECT_EQ(rt("e4*e4"), "-1");
  EXPECT_EQ(rt("e1 - e1"), "0");
  EXPECT_EQ(rt("3/4*e1 + 1/2"), "1/2 + 3/4*e1");
  EXPECT_EQ(rt("(1 + e1)*(1 - e1)"), "0");
  EXPECT_EQ(rt("-(e1 + 2)"), "-2 - e1");
  EXPECT_EQ(rt("Re(2 + e1*e1 + e2)"), "3");
  EXPECT_EQ(rt("grade(1 + e1 + e1*e2 + e3, 1)"), "e1 + e3");
  EXPECT_EQ(rt("top()"), "e1*e2*e3*e4");
  EXPECT_EQ(rt("I(e1)"), "e1");
}

TEST(Expression, DecimalLiteralsAreExactOverRationals) {
  EXPECT_EQ(rt("0.25*e1"), "1/4*e1");
  EXPECT_EQ(rt("2e1"), "20");
  EXPECT_EQ(rt("2*e1"), "2*e1");
  EXPECT_EQ(rt("1.5e-1"), "3/20");
  EXPECT_EQ(rt("6/4"), "3/2");
}

TEST(Expression, FloatRing) {
  const auto x = parse_expression<double>("0.1 + 0.2*e1", kSig);
  EXPECT_DOUBLE_EQ(x.coefficient(Blade{}), 0.1);
  EXPECT_EQ(print_expression(x), "0.1 + 0.2*e1");
  EXPECT_DOUBLE_EQ(parse_expression<double>("1/4", kSig).coefficient(Blade{}), 0.25);
}

TEST(Expression, BinaryRingAndLetters) {
  ParseOptions opts;
  opts.letters = true;
  const auto x = parse_expression<GF2>("a*b + b*a + c + 3", kSig, opts);
  EXPECT_EQ(print_expression(x), "1 + e3");
  EXPECT_EQ(print_expression(parse_expression<GF2>("-e1", kSig)), "e1");
  EXPECT_THROW(parse_expression<GF2>("0.5*a", kSig, opts), ring_error);
  EXPECT_THROW(parse_expression<GF2>("1/2", kSig, opts), ring_error);
  // Letters are off by default.
  EXPECT_THROW(parse_expression<GF2>("a", kSig), parse_error);
}

TEST(Expression, RuntimeRingDispatch) {
  const auto v = parse_expression("e1*e1", RingTag::ExactRational, Signature{-1});
  EXPECT_EQ(print_expression(v), "-1");
  const auto g = parse_expression("e1*e1", RingTag::GF2, Signature{-1});
  EXPECT_EQ(print_expression(g), "1");
  EXPECT_EQ(parse_ring("gf2"), RingTag::GF2);
  EXPECT_THROW(parse_ring("complex"), config_error);
}

TEST(Expression, ErrorsCarryPositions) {
  try {
    (void)parse_expression<Rational>("e1 +\n  e9", kSig);
    FAIL() << "expected parse_error";
  } catch (const parse_error &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  try {
    (void)parse_expression<Rational>("(e1 + e2", kSig);
    FAIL() << "expected parse_error";
  } catch (const parse_error &e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(Expression, MalformedInputs) {
  for (const char *bad : {"", "e1 +", "e0", "e5", "x", "1/0", "3e", "2.e1.", "1..2",
                          "(", ")", "T e1", "grade(e1)", "grade(e1, -1)",
                          "grade(e1, 1.5)", "top", "e1 $ e2", "1e99999", "1 2",
                          "Re(e1", "e1,e2"})
    EXPECT_THROW((void)parse_expression<Rational>(bad, kSig), cliff::error) << bad;
  EXPECT_THROW((void)parse_expression<double>("1e400", kSig), parse_error);
  EXPECT_THROW((void)parse_expression<Rational>(std::string(300, '('), kSig),
               parse_error);
  EXPECT_THROW((void)parse_expression<Rational>(std::string(70000, '1'), kSig),
               parse_error);
}

TEST(Expression, RoundTripEveryRing) {
  Rng rng(kSeed + 40);
  EXPECT_EQ(round_trip_failures<GF2>(rng, 300), 0);
  EXPECT_EQ(round_trip_failures<Rational>(rng, 300), 0);
  EXPECT_EQ(round_trip_failures<double>(rng, 300), 0);
}

TEST(Expression, FuzzOnlyStructuredErrors) {
  Rng rng(kSeed + 41);
  const auto tally = fuzz_parser(rng, 3000);
  EXPECT_EQ(tally.failures, 0);
  EXPECT_GT(tally.rejected, 0);
  EXPECT_GT(tally.parsed, 0);
}

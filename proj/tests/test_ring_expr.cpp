#include <gtest/gtest.h>

#include "support.hpp"

namespace idealspace {
namespace {

using testing::ring;

ErrorKind kind_of(const std::string& expr) {
  try {
    parse_ring_expression(expr);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << expr << " parsed";
  return ErrorKind::ParseError;
}

TEST(RingExpr, ProductOfThreeFields) {
  const RingPtr r = ring("Z2xZ2xZ2");
  EXPECT_EQ(r->size(), 8U);
  EXPECT_EQ(r->label(), "Z2xZ2xZ2");
}

TEST(RingExpr, QuotientIsZ4) {
  const RingPtr r = ring("Z12/(4)");
  EXPECT_EQ(r->size(), 4U);
  EXPECT_TRUE(find_isomorphism(r, make_zmod(4)).has_value());
  EXPECT_EQ(r->label(), "Z12/(4)");
}

TEST(RingExpr, LocalizationIsZ3) {
  const RingPtr r = ring("Z12@(2)");
  EXPECT_EQ(r->size(), 3U);
  EXPECT_TRUE(find_isomorphism(r, make_zmod(3)).has_value());
}

TEST(RingExpr, TupleGenerators) {
  const RingPtr r = ring("Z6xZ6/((2,2))");
  // ⟨(2,2)⟩ = 2Z6 x 2Z6 has 9 elements.
  EXPECT_EQ(r->size(), 4U);
  EXPECT_TRUE(find_isomorphism(r, ring("Z2xZ2")).has_value());
}

TEST(RingExpr, IntegerLiteralInProductIsDiagonal) {
  const RingPtr r = ring("Z4xZ6/(2)");
  EXPECT_TRUE(find_isomorphism(r, ring("Z2xZ2")).has_value());
}

TEST(RingExpr, SuffixesApplyToEveryPendingFactor) {
  // Z2xZ6/((0,2)) quotients the whole product, not only Z6.
  const RingPtr r = ring("Z2xZ6/((0,2))");
  EXPECT_EQ(r->size(), 4U);
  const RingPtr s = ring("Z6/(3)xZ4");
  EXPECT_EQ(s->size(), 12U);
}

TEST(RingExpr, WhitespaceIgnored) { EXPECT_EQ(ring(" Z2 x Z3 ")->size(), 6U); }

TEST(RingExpr, MalformedInputs) {
  EXPECT_EQ(kind_of("Zx"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(""), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("Z6/("), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("Z6xZ6/((1,2,3))"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("Z6 Z6"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("Z1"), ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of("Z0"), ErrorKind::InvalidSize);
  EXPECT_EQ(kind_of("Z6/(1)"), ErrorKind::ImproperIdeal);
  EXPECT_EQ(kind_of("Z6@(0)"), ErrorKind::ZeroInMultiplicativeSet);
  EXPECT_EQ(kind_of("Z99"), ErrorKind::CapExceeded);
}

TEST(RingExpr, ParseErrorCarriesPosition) {
  try {
    parse_ring_expression("Zx");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1U);
  }
}

}  // namespace
}  // namespace idealspace

#include <gtest/gtest.h>

#include "curled/error.hpp"
#include "curled/field.hpp"
#include "properties.hpp"

namespace {

using namespace curled;

const FieldDescriptor kQ = FieldDescriptor::rational();
const FieldDescriptor kGF2 = FieldDescriptor::prime(2);
const FieldDescriptor kGF3 = FieldDescriptor::prime(3);
const FieldDescriptor kGF5 = FieldDescriptor::prime(5);

TEST(FieldDescriptor, RejectsNonPrimes) {
  EXPECT_THROW(FieldDescriptor::prime(0), InvalidFieldError);
  EXPECT_THROW(FieldDescriptor::prime(1), InvalidFieldError);
  EXPECT_THROW(FieldDescriptor::prime(4), InvalidFieldError);
  EXPECT_THROW(FieldDescriptor::prime(std::uint64_t{1} << 31), InvalidFieldError);
  EXPECT_NO_THROW(FieldDescriptor::prime(2147483647));
}

TEST(FieldDescriptor, Names) {
  EXPECT_EQ(kGF3.to_string(), "GF(3)");
  EXPECT_EQ(kQ.to_string(), "Q");
  EXPECT_EQ(kGF3.order(), std::optional<std::uint64_t>(3));
  EXPECT_FALSE(kQ.order().has_value());
}

TEST(FromInteger, Examples) {
  EXPECT_EQ(FieldElement::from_integer(5, kGF3), FieldElement::residue(2, kGF3));
  EXPECT_EQ(FieldElement::from_integer(0, kQ).to_string(), "0");
  EXPECT_TRUE(FieldElement::from_integer(0, kQ).is_zero());
  EXPECT_EQ(FieldElement::from_integer(-1, kGF2), FieldElement::one(kGF2));
  EXPECT_EQ(FieldElement::from_integer(Integer("-123456789012345678901234567890"), kGF5).as_residue(), 0u);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(FieldElement::residue(4, kGF5).inverse(), FieldElement::residue(4, kGF5));
  const FieldElement two_thirds = FieldElement::from_fraction(2, 3, kQ);
  EXPECT_EQ(two_thirds.inverse(), FieldElement::from_fraction(3, 2, kQ));
  EXPECT_THROW(FieldElement::zero(kGF2).inverse(), DivisionByZeroError);
  EXPECT_THROW(FieldElement::zero(kQ).inverse(), DivisionByZeroError);
}

TEST(Rationals, StayReduced) {
  const FieldElement x = FieldElement::from_fraction(6, -8, kQ);
  EXPECT_EQ(x.as_rational(), Rational(-3, 4));
  EXPECT_EQ(x.to_string(), "-3/4");
  EXPECT_EQ((x + FieldElement::from_fraction(3, 4, kQ)).to_string(), "0");
  EXPECT_THROW(FieldElement::from_fraction(1, 0, kQ), DivisionByZeroError);
}

TEST(Fractions, OverPrimeFields) {
  EXPECT_EQ(FieldElement::from_fraction(1, 2, kGF5), FieldElement::residue(3, kGF5));
  EXPECT_THROW(FieldElement::from_fraction(1, 5, kGF5), DivisionByZeroError);
}

TEST(Enumerate, Examples) {
  const auto gf2 = enumerate_field(kGF2);
  ASSERT_EQ(gf2.size(), 2u);
  EXPECT_TRUE(gf2[0].is_zero());
  EXPECT_TRUE(gf2[1].is_one());
  const auto gf3 = enumerate_field(kGF3);
  ASSERT_EQ(gf3.size(), 3u);
  for (std::uint32_t r = 0; r < 3; ++r) EXPECT_EQ(gf3[r].as_residue(), r);
  EXPECT_THROW(enumerate_field(kQ), UnsupportedFieldError);
}

TEST(Mixing, FieldsIsAnError) {
  EXPECT_THROW(FieldElement::one(kGF2) + FieldElement::one(kGF3), FieldMismatchError);
  EXPECT_THROW(FieldElement::one(kGF2) * FieldElement::one(kQ), FieldMismatchError);
  EXPECT_THROW(FieldElement::one(kGF2).as_rational(), UnsupportedFieldError);
  EXPECT_THROW(FieldElement::one(kQ).as_residue(), UnsupportedFieldError);
}

TEST(Parse, Literals) {
  EXPECT_EQ(parse_field_element("-7/21", kQ), FieldElement::from_fraction(-1, 3, kQ));
  EXPECT_EQ(parse_field_element("12", kGF5), FieldElement::residue(2, kGF5));
}

TEST(LargePrime, NoOverflow) {
  const FieldDescriptor p = FieldDescriptor::prime(2147483647);
  const FieldElement m = FieldElement::from_integer(-1, p);
  EXPECT_EQ(m * m, FieldElement::one(p));
  EXPECT_EQ((m + m).as_residue(), 2147483645u);
  EXPECT_EQ(m.inverse(), m);
}

class FieldLaws : public ::testing::TestWithParam<std::uint32_t> {};

FieldDescriptor descriptor_for(std::uint32_t p) { return p == 0 ? kQ : FieldDescriptor::prime(p); }

TEST_P(FieldLaws, Axioms) {
  const props::Result r = props::field_axioms(descriptor_for(GetParam()), 10000, 1);
  EXPECT_TRUE(r.passed) << r.detail;
  EXPECT_EQ(r.cases, 10000u);
}

TEST_P(FieldLaws, FromIntegerIsAHomomorphism) {
  const props::Result r = props::from_integer_homomorphism(descriptor_for(GetParam()), 10000, 2);
  EXPECT_TRUE(r.passed) << r.detail;
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldLaws, ::testing::Values(2u, 3u, 5u, 7u, 2147483647u, 0u));

}  // namespace

#include <gtest/gtest.h>

#include "curled/conditions.hpp"
#include "curled/error.hpp"
#include "properties.hpp"
#include "reference.hpp"

namespace {

using namespace curled;

const FieldDescriptor kQ = FieldDescriptor::rational();
const FieldDescriptor kGF2 = FieldDescriptor::prime(2);
const FieldDescriptor kGF3 = FieldDescriptor::prime(3);

Element g(FieldDescriptor d) { return Element::basis(Basis::g, d); }

bool all_hold(const std::vector<EquationVerdict>& v) {
  return std::all_of(v.begin(), v.end(), [](const EquationVerdict& x) { return x.holds; });
}

TEST(Equations, Inventory) {
  const auto& c10 = condition10_equations();
  const auto& c17 = condition17_equations();
  ASSERT_EQ(c10.size(), 18u);
  ASSERT_EQ(c17.size(), 3u);
  EXPECT_EQ(c10.front().name, "10-1");
  EXPECT_EQ(c10.front().text(), "A^2 = ijA");
  EXPECT_EQ(c10.back().name, "10-18");
  EXPECT_EQ(c17.front().name, "17-1");
}

TEST(Expr, ParsesAndEvaluates) {
  const CurledTable t = CurledTable::zero(kQ, CurledType(1, 1, 0))
                            .with(Param::A, Element::of(1, 2, 3, kQ))
                            .with(Param::C, Element::of(0, 1, 0, kQ));
  const Element A = t.param(Param::A);
  const Element C = t.param(Param::C);
  EXPECT_EQ(ConditionExpr::parse("A^2").evaluate(t), product(A, A, t));
  EXPECT_EQ(ConditionExpr::parse("iAe").evaluate(t), product(A, Element::basis(Basis::e, kQ), t));
  EXPECT_EQ(ConditionExpr::parse("i(Ae-eC)").evaluate(t),
            product(A, Element::basis(Basis::e, kQ), t) - product(Element::basis(Basis::e, kQ), C, t));
  EXPECT_EQ(ConditionExpr::parse("-kA").evaluate(t), Element::zero(kQ));
  EXPECT_EQ(ConditionExpr::parse("ie(D+F)").evaluate(t), Element::zero(kQ));
  EXPECT_THROW(ConditionExpr::parse("A+"), ParseError);
  EXPECT_THROW(ConditionExpr::parse("Q"), ParseError);
}

TEST(Condition10, Examples) {
  EXPECT_TRUE(all_hold(check_condition_10(CurledTable::zero(kGF2, CurledType()))));
  EXPECT_TRUE(all_hold(check_condition_10(CurledTable::zero(kGF2, CurledType(1, 0, 0)))));

  const auto v = check_condition_10(CurledTable::zero(kGF2, CurledType(1, 1, 0)).with(Param::A, g(kGF2)));
  ASSERT_EQ(v.size(), 18u);
  EXPECT_EQ(v[0].name, "10-1");
  EXPECT_FALSE(v[0].holds);
  ASSERT_TRUE(v[0].witness.has_value());
  EXPECT_TRUE(v[0].witness->first.is_zero());
  EXPECT_EQ(v[0].witness->second, g(kGF2));
}

TEST(Condition17, Examples) {
  EXPECT_TRUE(all_hold(check_condition_17(CurledTable::zero(kGF2, CurledType()))));
  EXPECT_TRUE(all_hold(check_condition_17(CurledTable::zero(kQ, CurledType()).with(Param::A, g(kQ)))));
  const auto v = check_condition_17(CurledTable::zero(kQ, CurledType(1, 1, 0)).with(Param::A, g(kQ)));
  EXPECT_TRUE(v[0].holds);
}

TEST(Theorem, Examples) {
  EXPECT_TRUE(is_ec_by_theorem(CurledTable::zero(kGF2, CurledType())));
  EXPECT_FALSE(is_ec_by_theorem(CurledTable::zero(kGF2, CurledType(1, 1, 0)).with(Param::A, g(kGF2))));
  EXPECT_TRUE(is_ec_by_theorem(CurledTable::zero(kQ, CurledType()).with(Param::A, g(kQ))));
}

TEST(Zeropotent, Examples) {
  EXPECT_TRUE(is_zeropotent_by_condition(CurledTable::zero(kGF2, CurledType())));
  const CurledTable t = CurledTable::zero(kGF3, CurledType())
                            .with(Param::A, g(kGF3))
                            .with(Param::C, Element::of(0, 0, 2, kGF3));
  EXPECT_TRUE(is_zeropotent_by_condition(t));
  EXPECT_FALSE(is_zeropotent_by_condition(CurledTable::zero(kGF2, CurledType(1, 0, 0))));
  const auto v = check_zeropotent_18(CurledTable::zero(kGF2, CurledType(1, 0, 0)));
  ASSERT_EQ(v.size(), 4u);
  EXPECT_FALSE(v[0].holds);
  EXPECT_TRUE(v[1].holds && v[2].holds && v[3].holds);
}

TEST(Zeropotent, ClosedFormAgreesWithReference) {
  std::mt19937_64 rng(6);
  for (FieldDescriptor d : {kGF2, kGF3}) {
    for (int n = 0; n < 2000; ++n) {
      CurledTable t = props::random_table(d, rng);
      // Push roughly half the samples onto the zeropotent locus.
      if (n % 2 == 0) {
        t = t.with_type(CurledType()).with(Param::C, -t.param(Param::A)).with(Param::E, -t.param(Param::B));
      }
      EXPECT_EQ(is_zeropotent_by_condition(t), ref::is_zeropotent(ref::tensor_of(t)));
    }
  }
}

TEST(Report, Completeness) {
  for (FieldDescriptor d : {kGF2, kGF3, kQ}) {
    const props::Result r = props::report_completeness(d, 1000, 7);
    EXPECT_TRUE(r.passed) << d.to_string() << ": " << r.detail;
  }
}

TEST(Report, TheoremAgreesWithReferenceOnGF2Sample) {
  std::mt19937_64 rng(8);
  for (int n = 0; n < 3000; ++n) {
    const CurledTable t = props::random_table(kGF2, rng);
    EXPECT_EQ(is_ec_by_theorem(t), ref::is_ec(ref::tensor_of(t)));
  }
}

}  // namespace

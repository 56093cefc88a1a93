#include <gtest/gtest.h>

#include <cstdlib>

#include "curled/error.hpp"
#include "curled/io.hpp"
#include "curled/oracle.hpp"
#include "properties.hpp"
#include "reference.hpp"

namespace {

using namespace curled;

const FieldDescriptor kQ = FieldDescriptor::rational();
const FieldDescriptor kGF2 = FieldDescriptor::prime(2);
const FieldDescriptor kGF3 = FieldDescriptor::prime(3);
const FieldDescriptor kGF5 = FieldDescriptor::prime(5);

Element g(FieldDescriptor d) { return Element::basis(Basis::g, d); }

TEST(Deciders, EcExamples) {
  EXPECT_TRUE(is_ec_bruteforce(CurledTable::zero(kGF2, CurledType())));
  EXPECT_TRUE(is_ec_bruteforce(CurledTable::zero(kGF2, CurledType(1, 0, 0))));
  const CurledTable t = CurledTable::zero(kGF2, CurledType(1, 1, 0)).with(Param::A, g(kGF2));
  EXPECT_FALSE(is_ec_bruteforce(t));
  const auto witness = ec_counterexample(t);
  ASSERT_TRUE(witness.has_value());
  const auto& [x, y] = *witness;
  EXPECT_NE(square(product(x, y, t), t), product(square(x, t), square(y, t), t));
  EXPECT_THROW(is_ec_bruteforce(CurledTable::zero(kQ, CurledType())), UnsupportedFieldError);
}

TEST(Deciders, PolynomialExamples) {
  EXPECT_TRUE(is_ec_polynomial(CurledTable::zero(kQ, CurledType())));
  EXPECT_FALSE(is_ec_polynomial(CurledTable::zero(kQ, CurledType(1, 1, 0)).with(Param::A, g(kQ))));
  EXPECT_TRUE(is_ec_polynomial(CurledTable::zero(kQ, CurledType()).with(Param::A, g(kQ))));
}

TEST(Deciders, ZeropotentExamples) {
  EXPECT_TRUE(is_zeropotent_bruteforce(CurledTable::zero(kGF2, CurledType())));
  const CurledTable t = CurledTable::zero(kGF3, CurledType())
                            .with(Param::A, g(kGF3))
                            .with(Param::C, Element::of(0, 0, 2, kGF3));
  EXPECT_TRUE(is_zeropotent_bruteforce(t));
  EXPECT_FALSE(is_zeropotent_bruteforce(CurledTable::zero(kGF2, CurledType(1, 0, 0))));
  EXPECT_THROW(is_zeropotent_bruteforce(CurledTable::zero(kQ, CurledType())), UnsupportedFieldError);
}

TEST(Deciders, AgreeWithReferenceOnSamples) {
  std::mt19937_64 rng(21);
  for (FieldDescriptor d : {kGF2, kGF3}) {
    const PolynomialEcDecider polynomial(d);
    for (int n = 0; n < 400; ++n) {
      const CurledTable t = props::random_table(d, rng);
      const bool expect = ref::is_ec(ref::tensor_of(t));
      EXPECT_EQ(is_ec_bruteforce(t), expect);
      EXPECT_EQ(is_ec_polynomial(t), expect);
      EXPECT_EQ(polynomial(t), expect);
      EXPECT_EQ(is_zeropotent_bruteforce(t), ref::is_zeropotent(ref::tensor_of(t)));
    }
  }
}

TEST(Deciders, PolynomialDeciderIsFieldBound) {
  const PolynomialEcDecider polynomial(kGF2);
  EXPECT_THROW(polynomial(CurledTable::zero(kGF3, CurledType())), FieldMismatchError);
}

TEST(TableIds, CountsAndErrors) {
  EXPECT_EQ(table_count(kGF2), 262144u);
  EXPECT_EQ(table_count(kGF3), 387420489u);
  EXPECT_THROW(table_count(kQ), UnsupportedFieldError);
  EXPECT_THROW(table_count(FieldDescriptor::prime(2147483647)), OverflowError);
  EXPECT_THROW(decode(TableId{kGF2, CurledType(), 262144}), std::out_of_range);
}

TEST(TableIds, RoundTrip) {
  const props::Result r = props::encode_decode_round_trip(500, 22);
  EXPECT_TRUE(r.passed) << r.detail;
}

TEST(Enumeration, VisitsEveryTableInOrder) {
  std::uint64_t visits = 0;
  std::uint64_t expected_index = 0;
  std::uint64_t zeropotent = 0;
  enumerate_tables(kGF2, CurledType(), [&](const CurledTable& t, std::uint64_t index) {
    ASSERT_EQ(index, expected_index++);
    ++visits;
    // The reference tensor from the raw index: 512 of them satisfy x^2 = 0.
    if (ref::is_zeropotent(ref::tensor_of_index(2, 0, index))) {
      ++zeropotent;
      EXPECT_TRUE(is_zeropotent_by_condition(t));
    }
  });
  EXPECT_EQ(visits, 262144u);
  EXPECT_EQ(zeropotent, 512u);
}

TEST(Snapshot, ReferenceOracleReproducesFrozenCounts) {
  // Rows of the frozen GF(2) classification, recounted with the reference
  // tensor arithmetic straight from the raw index.
  struct Row {
    unsigned code;
    std::uint64_t curled, ec;
  };
  for (const Row& row : {Row{0, 1024, 3350}, Row{1, 1024, 354}, Row{6, 1024, 158}, Row{7, 1024, 648}}) {
    std::uint64_t curled = 0, ec = 0;
    for (std::uint64_t index = 0; index < 262144; ++index) {
      const ref::Tensor t = ref::tensor_of_index(2, row.code, index);
      curled += ref::is_curled(t);
      ec += ref::is_ec(t);
    }
    EXPECT_EQ(curled, row.curled) << "type code " << row.code;
    EXPECT_EQ(ec, row.ec) << "type code " << row.code;
  }
}

TEST(Enumeration, RangesAndErrors) {
  std::uint64_t visits = 0;
  enumerate_tables(kGF3, CurledType(1, 1, 1), [&](const CurledTable&, std::uint64_t) { ++visits; }, 100, 200);
  EXPECT_EQ(visits, 100u);
  EXPECT_THROW(enumerate_tables(kQ, CurledType(), [](const CurledTable&, std::uint64_t) {}), UnsupportedFieldError);
}

TEST(Sampler, DeterministicAndUniformEnough) {
  EXPECT_EQ(sample_table(kGF5, CurledType(1, 0, 1), 42, 7), sample_table(kGF5, CurledType(1, 0, 1), 42, 7));
  EXPECT_NE(sample_table(kGF5, CurledType(1, 0, 1), 42, 7), sample_table(kGF5, CurledType(1, 0, 1), 42, 8));
  EXPECT_NE(sample_table(kGF5, CurledType(1, 0, 1), 42, 7), sample_table(kGF5, CurledType(1, 0, 1), 43, 7));
  std::array<std::uint64_t, 5> hist{};
  for (std::uint64_t n = 0; n < 2000; ++n) {
    const CurledTable t = sample_table(kGF5, CurledType(), 1, n);
    for (const Element& x : t.params())
      for (std::size_t q = 0; q < 3; ++q) ++hist[x[q].as_residue()];
  }
  // 36000 draws; each residue should be near 7200.
  for (std::uint64_t h : hist) {
    EXPECT_GT(h, 6800u);
    EXPECT_LT(h, 7600u);
  }
}

TEST(Harness, SmallExhaustiveFieldIsClean) {
  HarnessOptions options;
  options.threads = 2;
  options.chunk_size = 5000;
  const PopulationReports both = differential_test_both(kGF2, CurledType(), ExhaustiveMode{}, options);
  EXPECT_EQ(both.all.counts.visited, 262144u);
  EXPECT_EQ(both.all.counts.tables, 262144u);
  EXPECT_EQ(both.all.counts.zeropotent_bruteforce, 512u);
  EXPECT_EQ(both.all.counts.zeropotent_condition, 512u);
  EXPECT_TRUE(both.all.clean());
  EXPECT_TRUE(both.curled_only.clean());
  EXPECT_EQ(both.curled_only.counts.tables, both.all.counts.curled);
  EXPECT_EQ(both.curled_only.counts.visited, 262144u);
  EXPECT_EQ(both.all.counts.ec_bruteforce, both.all.counts.ec_theorem);
  EXPECT_EQ(both.all.counts.ec_bruteforce, both.all.counts.ec_polynomial);
}

TEST(Harness, SampleExample) {
  const DifferentialReport r =
      differential_test(kGF3, CurledType(1, 1, 1), SampleMode{20000, 42}, Population::all);
  EXPECT_EQ(r.counts.tables, 20000u);
  EXPECT_TRUE(r.clean());
  EXPECT_EQ(r.counts.zeropotent_condition, 0u);
}

TEST(Harness, EmptySampleAndErrors) {
  const DifferentialReport r = differential_test(kGF5, CurledType(), SampleMode{0, 3}, Population::curled_only);
  EXPECT_EQ(r.counts, DeciderCounts{});
  EXPECT_TRUE(r.mismatches.empty());
  EXPECT_THROW(differential_test(kGF3, CurledType(), ExhaustiveMode{}, Population::all), BudgetExceededError);
  EXPECT_THROW(differential_test(kQ, CurledType(), SampleMode{1, 1}, Population::all), UnsupportedFieldError);
  EXPECT_THROW(differential_test(FieldDescriptor::prime(2147483647), CurledType(), ExhaustiveMode{}, Population::all),
               BudgetExceededError);
}

TEST(Harness, Determinism) {
  const props::Result r = props::chunked_determinism();
  EXPECT_TRUE(r.passed) << r.detail;
  const auto a = differential_test_both(kGF5, CurledType(0, 1, 1), SampleMode{2000, 9});
  const auto b = differential_test_both(kGF5, CurledType(0, 1, 1), SampleMode{2000, 9});
  EXPECT_EQ(reports_to_json({a.all, a.curled_only}), reports_to_json({b.all, b.curled_only}));
}

Mismatch mismatch(std::uint64_t index) { return Mismatch{TableId{kGF2, CurledType(), index}, std::nullopt, {}}; }

TEST(Report, MergeKeepsOrderAndCap) {
  DifferentialReport first;
  first.counts.visited = 10;
  first.mismatch_total = 2;
  first.mismatches = {mismatch(1), mismatch(2)};
  DifferentialReport later;
  later.counts.visited = 5;
  later.mismatch_total = 3;
  later.mismatches = {mismatch(7), mismatch(8), mismatch(9)};
  first.merge(later, 4);
  EXPECT_EQ(first.counts.visited, 15u);
  EXPECT_EQ(first.mismatch_total, 5u);
  ASSERT_EQ(first.mismatches.size(), 4u);
  EXPECT_EQ(first.mismatches[2].id.index, 7u);
  EXPECT_EQ(first.mismatches[3].id.index, 8u);
}

TEST(Report, Classification) {
  const auto rows = classify_counts(kGF3, SampleMode{300, 5});
  ASSERT_EQ(rows.size(), 8u);
  for (unsigned c = 0; c < 8; ++c) {
    EXPECT_EQ(rows[c].type.code(), c);
    EXPECT_EQ(rows[c].population, Population::all);
    EXPECT_EQ(rows[c].counts.tables, 300u);
    if (c != 0) EXPECT_EQ(rows[c].counts.zeropotent_bruteforce, 0u);
  }
}

class BudgetEnv : public ::testing::Test {
 protected:
  void TearDown() override { unsetenv("CAL_BUDGET_TABLES"); }
};

TEST_F(BudgetEnv, Override) {
  unsetenv("CAL_BUDGET_TABLES");
  EXPECT_EQ(exhaustive_budget_from_env(), HarnessOptions::kDefaultExhaustiveBudget);
  setenv("CAL_BUDGET_TABLES", "1000000000", 1);
  EXPECT_EQ(exhaustive_budget_from_env(), 1000000000u);
  setenv("CAL_BUDGET_TABLES", "junk", 1);
  EXPECT_EQ(exhaustive_budget_from_env(), HarnessOptions::kDefaultExhaustiveBudget);
  setenv("CAL_BUDGET_TABLES", "0", 1);
  EXPECT_EQ(exhaustive_budget_from_env(), HarnessOptions::kDefaultExhaustiveBudget);
}

}  // namespace

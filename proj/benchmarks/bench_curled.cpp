#include <benchmark/benchmark.h>

#include <random>

#include "curled/conditions.hpp"
#include "curled/formal.hpp"
#include "curled/oracle.hpp"

namespace {

using namespace curled;

CurledTable sample(std::uint32_t p, std::uint64_t n) {
  return sample_table(FieldDescriptor::prime(p), CurledType::from_code(static_cast<unsigned>(n % 8)), 1, n);
}

void BM_Product(benchmark::State& state) {
  const FieldDescriptor gf = FieldDescriptor::prime(static_cast<std::uint32_t>(state.range(0)));
  const CurledTable t = sample(gf.characteristic(), 3);
  const Element x = Element::of(1, 2, 3, gf);
  const Element y = Element::of(4, 0, 1, gf);
  for (auto _ : state) benchmark::DoNotOptimize(product(x, y, t));
}
BENCHMARK(BM_Product)->Arg(2)->Arg(5)->Arg(2147483647);

void BM_ProductRational(benchmark::State& state) {
  const FieldDescriptor q = FieldDescriptor::rational();
  CurledTable t = CurledTable::zero(q, CurledType(1, 0, 1));
  for (Param p : kAllParams) t = t.with(p, Element::of(1, -2, 3, q));
  const Element x(FieldElement::from_fraction(1, 3, q), FieldElement::from_integer(2, q), FieldElement::zero(q));
  for (auto _ : state) benchmark::DoNotOptimize(product(x, x, t));
}
BENCHMARK(BM_ProductRational);

void BM_Square(benchmark::State& state) {
  const FieldDescriptor gf = FieldDescriptor::prime(5);
  const CurledTable t = sample(5, 3);
  const Element x = Element::of(1, 2, 3, gf);
  for (auto _ : state) benchmark::DoNotOptimize(square(x, t));
}
BENCHMARK(BM_Square);

// The three endo-commutativity deciders over a fixed batch of tables.
template <class Decide>
void run_batch(benchmark::State& state, std::uint32_t p, Decide decide) {
  std::vector<CurledTable> tables;
  for (std::uint64_t n = 0; n < 256; ++n) tables.push_back(sample(p, n));
  std::size_t n = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide(tables[n++ % tables.size()]));
}

void BM_EcBruteforce(benchmark::State& state) {
  run_batch(state, static_cast<std::uint32_t>(state.range(0)), is_ec_bruteforce);
}
BENCHMARK(BM_EcBruteforce)->Arg(2)->Arg(3)->Arg(5);

void BM_EcTheorem(benchmark::State& state) {
  run_batch(state, static_cast<std::uint32_t>(state.range(0)), is_ec_by_theorem);
}
BENCHMARK(BM_EcTheorem)->Arg(2)->Arg(3)->Arg(5);

void BM_EcPolynomialDecider(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const PolynomialEcDecider decide(FieldDescriptor::prime(p));
  run_batch(state, p, [&](const CurledTable& t) { return decide(t); });
}
BENCHMARK(BM_EcPolynomialDecider)->Arg(2)->Arg(3)->Arg(5);

void BM_EcPolynomialFromScratch(benchmark::State& state) {
  run_batch(state, 3, is_ec_polynomial);
}
BENCHMARK(BM_EcPolynomialFromScratch);

void BM_CurledBruteforce(benchmark::State& state) {
  run_batch(state, static_cast<std::uint32_t>(state.range(0)), is_curled_bruteforce);
}
BENCHMARK(BM_CurledBruteforce)->Arg(2)->Arg(3)->Arg(5);

void BM_DifferenceExpansion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(difference_expansion());
}
BENCHMARK(BM_DifferenceExpansion)->Unit(benchmark::kMillisecond);

void BM_DeciderSuite(benchmark::State& state) {
  const DeciderSuite suite(FieldDescriptor::prime(2));
  run_batch(state, 2, [&](const CurledTable& t) { return suite(t).ec_agree(); });
}
BENCHMARK(BM_DeciderSuite);

}  // namespace

BENCHMARK_MAIN();

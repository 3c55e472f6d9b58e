#include "cyclemod/cycles/checks.hpp"
#include "cyclemod/cycles/cohomology.hpp"
#include "cyclemod/cycles/complex.hpp"
#include "cyclemod/cycles/morphisms.hpp"
#include "cyclemod/exactfield/parse.hpp"
#include "cyclemod/milnor/milnor.hpp"
#include "cyclemod/premodule/relations.hpp"
#include "cyclemod/premodule/sampling.hpp"

#include <benchmark/benchmark.h>

using namespace cyclemod;

static void BM_FactorPoly(benchmark::State& state) {
  const auto f = field_of_order(static_cast<std::uint64_t>(state.range(0)));
  Rng rng(1);
  std::vector<Poly> polys;
  for (int i = 0; i < 64; ++i) polys.push_back(random_poly(f, rng, 12, true));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factor_poly(polys[i++ % polys.size()]));
}
BENCHMARK(BM_FactorPoly)->Arg(2)->Arg(5)->Arg(9);

static void BM_SymbolK2(benchmark::State& state) {
  const auto f = FieldRef::rational(field_of_order(static_cast<std::uint64_t>(state.range(0))));
  Rng rng(2);
  std::vector<std::pair<RationalFunction, RationalFunction>> pairs;
  for (int i = 0; i < 64; ++i) pairs.emplace_back(random_nonzero(f.base, rng, 4), random_nonzero(f.base, rng, 4));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(symbol(f, {a, b}));
  }
}
BENCHMARK(BM_SymbolK2)->Arg(3)->Arg(5);

static void BM_Reciprocity(benchmark::State& state) {
  const auto f = FieldRef::rational(field_of_order(static_cast<std::uint64_t>(state.range(0))));
  Rng rng(3);
  std::vector<KElement> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(sample_milnor(f, 2, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reciprocity_sum(xs[i++ % xs.size()]));
}
BENCHMARK(BM_Reciprocity)->Arg(2)->Arg(3)->Arg(5);

static void BM_Corestriction(benchmark::State& state) {
  const auto small = field_of_order(3), big = field_of_order(81);
  const FieldMap phi = FieldMap::constant_extension(default_embedding(small, big));
  Rng rng(4);
  std::vector<KElement> xs;
  for (int i = 0; i < 32; ++i) xs.push_back(sample_milnor(FieldRef::rational(big), 2, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cor_field(phi, xs[i++ % xs.size()]));
}
BENCHMARK(BM_Corestriction);

static void BM_DifferentialPlane(benchmark::State& state) {
  const auto M = milnor_instance();
  const auto X = builtin_scheme("P2", field_of_order(static_cast<std::uint64_t>(state.range(0))));
  Rng rng(5);
  std::vector<CycleClass> cs;
  for (int i = 0; i < 16; ++i) cs.push_back(sample_class(M, X, 0, 2, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(differential(M, differential(M, cs[i++ % cs.size()])));
}
BENCHMARK(BM_DifferentialPlane)->Arg(3)->Arg(5);

static void BM_CohomologyWindow(benchmark::State& state) {
  const auto M = milnor_instance();
  const auto P1 = SchemeModel::projective_line(field_of_order(3));
  const int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_window(M, P1, 1, 1, D));
}
BENCHMARK(BM_CohomologyWindow)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_Trace(benchmark::State& state) {
  const auto M = milnor_instance();
  const auto P1 = SchemeModel::projective_line(field_of_order(5));
  const Morphism f = substitution(P1, parse_rational("(t^5+2)/(t^2+t+1)", field_of_order(5)));
  for (auto _ : state) benchmark::DoNotOptimize(trace(M, f));
}
BENCHMARK(BM_Trace)->Unit(benchmark::kMillisecond);

static void BM_RelationSuite(benchmark::State& state) {
  const auto M = milnor_instance();
  const std::size_t trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_relation_suite(M, {trials, 42, {}}));
}
BENCHMARK(BM_RelationSuite)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "omkit/omkit.hpp"

namespace {

void BM_AdjointnessScanEvenSubsets6(benchmark::State& state) {
  const omkit::UnsharpResiduatedStructure s = omkit::to_urp(omkit::catalog::even_subsets(6));
  for (auto _ : state) benchmark::DoNotOptimize(omkit::r3_failing_triples(s));
  state.SetItemsProcessed(state.iterations() * 32 * 32 * 32);
}
BENCHMARK(BM_AdjointnessScanEvenSubsets6)->Unit(benchmark::kMillisecond);

void BM_ValidateUrpEvenSubsets6(benchmark::State& state) {
  const omkit::UnsharpResiduatedStructure s = omkit::to_urp(omkit::catalog::even_subsets(6));
  for (auto _ : state) benchmark::DoNotOptimize(omkit::validate_urp(s));
}
BENCHMARK(BM_ValidateUrpEvenSubsets6)->Unit(benchmark::kMillisecond);

void BM_ToUrp(benchmark::State& state) {
  const omkit::BoundedInvolutivePoset p = omkit::catalog::mo(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omkit::to_urp(p));
}
BENCHMARK(BM_ToUrp)->Arg(2)->Arg(8)->Arg(31);

void BM_Enumerate(benchmark::State& state) {
  const auto cls = state.range(1) == 0 ? omkit::SearchClass::involutive_poset
                                       : omkit::SearchClass::orthomodular_poset;
  const omkit::SearchSpec spec{static_cast<int>(state.range(0)), cls, true};
  for (auto _ : state) benchmark::DoNotOptimize(omkit::enumerate(spec));
}
BENCHMARK(BM_Enumerate)
    ->Args({6, 0})
    ->Args({8, 0})
    ->Args({8, 1})
    ->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const omkit::BoundedInvolutivePoset p =
      state.range(0) == 0 ? omkit::catalog::mo(4) : omkit::catalog::boolean_algebra(3);
  for (auto _ : state) benchmark::DoNotOptimize(omkit::canonical_form(p));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_UpperCone(benchmark::State& state) {
  const omkit::BoundedInvolutivePoset p = omkit::catalog::even_subsets(6);
  std::uint64_t bits = 0x9e3779b97f4a7c15ULL;
  for (auto _ : state) {
    bits = bits * 6364136223846793005ULL + 1442695040888963407ULL;
    benchmark::DoNotOptimize(omkit::upper_cone(p, omkit::Subset::from_bits(32, bits >> 40)));
  }
}
BENCHMARK(BM_UpperCone);

}  // namespace

BENCHMARK_MAIN();

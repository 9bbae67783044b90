#include <benchmark/benchmark.h>

#include "wicks/canonical.hpp"
#include "wicks/count.hpp"
#include "wicks/enumerate.hpp"
#include "wicks/flows.hpp"
#include "wicks/transform.hpp"

namespace {

const wicks::WicksWord& example() {
  static const auto w = wicks::parse_word("a b c d e a' f b' e' g h c' f' i g' d' h' i'");
  return w;
}

void BM_CanonicalForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wicks::canonical_form(example()));
}
BENCHMARK(BM_CanonicalForm);

void BM_GluingsGenus2(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    wicks::enumerate_gluings(2, [&](const wicks::WicksWord&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_GluingsGenus2)->Unit(benchmark::kMillisecond);

void BM_RecursiveGenus3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wicks::recursive_levels(3));
}
BENCHMARK(BM_RecursiveGenus3)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_ConstructAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wicks::construct_all(example()));
}
BENCHMARK(BM_ConstructAll)->Unit(benchmark::kMillisecond);

void BM_Report(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wicks::report(g));
}
BENCHMARK(BM_Report)->Arg(3)->Arg(15)->Arg(30);

void BM_InvolutionQuotient(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wicks::quotient_by_involution(example(), 9));
}
BENCHMARK(BM_InvolutionQuotient);

}  // namespace
BENCHMARK_MAIN();

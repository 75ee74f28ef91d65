#include <benchmark/benchmark.h>

#include "rootsuper/axioms.hpp"
#include "rootsuper/catalog.hpp"
#include "rootsuper/classify.hpp"
#include "rootsuper/orbits.hpp"
#include "rootsuper/weyl.hpp"

namespace {

using namespace rootsuper;

void BM_BuildC0T(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_imaginary(Family::C0T, n));
}
BENCHMARK(BM_BuildC0T)->DenseRange(2, 5);

void BM_VerifyT(benchmark::State& state) {
  const RootSupersystem s = make_root_system(Family::B, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_T(s));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(s.roots().size()));
}
BENCHMARK(BM_VerifyT)->DenseRange(2, 5)->Complexity();

void BM_VerifyTprime(benchmark::State& state) {
  const RootSupersystem s = make_root_system(Family::B, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_Tprime(s));
}
BENCHMARK(BM_VerifyTprime)->DenseRange(2, 5);

void BM_OrbitF4(benchmark::State& state) {
  const RootSupersystem f4 = make_exceptional(Family::F4);
  const Vector seed = fundamental_weights(f4, root_base(f4)).front();
  for (auto _ : state) benchmark::DoNotOptimize(orbit(f4, seed));
}
BENCHMARK(BM_OrbitF4);

void BM_SmallOrbitSearch(benchmark::State& state) {
  const RootSupersystem d = make_root_system(Family::D, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(small_orbit_search(d, 2));
}
BENCHMARK(BM_SmallOrbitSearch)->DenseRange(4, 5);

void BM_Classify(benchmark::State& state) {
  const auto labels = acceptance_catalog();
  const RootSupersystem s = make_system(labels[static_cast<std::size_t>(state.range(0))]).with_label(std::nullopt);
  state.SetLabel(to_string(labels[static_cast<std::size_t>(state.range(0))]));
  for (auto _ : state) benchmark::DoNotOptimize(classify(s));
}
BENCHMARK(BM_Classify)->Arg(30)->Arg(40)->Arg(55)->Arg(62);

void BM_FindIsomorphismC0T(benchmark::State& state) {
  const RootSupersystem a = make_imaginary(Family::C0T, 2, 0, 1);
  const RootSupersystem b = make_imaginary(Family::C0T, 2, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b));
}
BENCHMARK(BM_FindIsomorphismC0T);

}  // namespace

BENCHMARK_MAIN();

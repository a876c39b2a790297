#include <benchmark/benchmark.h>

#include <memory>

#include "nearprim/catalog.hpp"
#include "nearprim/primitivity.hpp"

using namespace nearprim;

namespace {

SandwichScheme z8_scheme(std::size_t fixed) {
  std::vector<Element> phi(8, 0);
  for (Element x = 1; x <= fixed; ++x) phi[x] = x;
  return {cyclic(8), AutomorphismSet::trivial(8), phi};
}

SandwichScheme z15_scheme() {
  const FiniteGroup g = cyclic(15);
  AutomorphismSet s = automorphism_group(g);
  std::vector<Element> phi(15, 0);
  for (Element x : s.orbit(1)) phi[x] = x;
  return {g, std::move(s), phi};
}

void BM_Subgroups(benchmark::State& state) {
  const FiniteGroup g = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subgroups(g));
}
BENCHMARK(BM_Subgroups)->Arg(4)->Arg(6)->Arg(8);

void BM_AutomorphismGroup(benchmark::State& state) {
  const auto groups = small_groups(8);
  const FiniteGroup& g = groups[static_cast<std::size_t>(state.range(0))].group;
  state.SetLabel(groups[static_cast<std::size_t>(state.range(0))].name);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_AutomorphismGroup)->DenseRange(9, 13);

void BM_Enumerate(benchmark::State& state) {
  const SandwichScheme sc = z8_scheme(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_centralizer_nearring(sc));
  state.counters["elements"] = static_cast<double>(enumerate_centralizer_nearring(sc).size());
}
BENCHMARK(BM_Enumerate)->DenseRange(1, 4);

void BM_Tables(benchmark::State& state) {
  const SandwichScheme sc = z8_scheme(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const NearRing n = enumerate_centralizer_nearring(sc);
    benchmark::DoNotOptimize(n.tables());
  }
}
BENCHMARK(BM_Tables)->DenseRange(1, 3);

void BM_Evaluate(benchmark::State& state) {
  const SandwichScheme sc = z8_scheme(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(sc));
}
BENCHMARK(BM_Evaluate)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CrossCheckZ15(benchmark::State& state) {
  const SandwichScheme sc = z15_scheme();
  for (auto _ : state) benchmark::DoNotOptimize(cross_check(sc));
}
BENCHMARK(BM_CrossCheckZ15)->Unit(benchmark::kMillisecond);

void BM_Embed(benchmark::State& state) {
  const SandwichScheme sc = z8_scheme(static_cast<std::size_t>(state.range(0)));
  auto n = std::make_shared<const NearRing>(enumerate_centralizer_nearring(sc));
  const auto a = action_from_scheme(n, sc);
  for (auto _ : state) benchmark::DoNotOptimize(embed(a));
}
BENCHMARK(BM_Embed)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CanonicalSweepZ2xZ4(benchmark::State& state) {
  const FiniteGroup g = direct_product(cyclic(2), cyclic(4));
  const auto subs = automorphism_subgroups(automorphism_group(g));
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& s : subs) {
      count += for_each_canonical_scheme(g, s, 4096, [](const SandwichScheme&) {});
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CanonicalSweepZ2xZ4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

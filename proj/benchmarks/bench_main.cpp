#include <benchmark/benchmark.h>

#include "qpc/contraction.hpp"
#include "qpc/king.hpp"
#include "qpc/shuffle.hpp"
#include "qpc/suites.hpp"

using namespace qpc;

namespace {

Quiver kronecker() {
  return Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
}

void BM_ShuffleMul(benchmark::State& state) {
  Quiver q = kronecker();
  long n = state.range(0);
  DimVector g({{"1", n}, {"2", n}});
  Rng rng(7);
  SymPoly f = random_sympoly(rng, g, 2);
  SymPoly h = random_sympoly(rng, g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(shuffle_mul(q, f, h));
}
BENCHMARK(BM_ShuffleMul)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ContractExample(benchmark::State& state) {
  QuiverWithPotential qp = example31();
  for (auto _ : state) benchmark::DoNotOptimize(contract_qp(qp, "a0"));
}
BENCHMARK(BM_ContractExample);

void BM_ContractRandom(benchmark::State& state) {
  Rng rng(11);
  std::vector<Contractible> cases;
  for (int i = 0; i < 32; ++i) cases.push_back(random_contractible(rng, 6, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = cases[i++ % cases.size()];
    benchmark::DoNotOptimize(contract_quiver(c.quiver, c.a0));
  }
}
BENCHMARK(BM_ContractRandom)->Arg(6)->Arg(12);

void BM_KingBruteForce(benchmark::State& state) {
  Quiver q = kronecker();
  DimVector g({{"1", 1}, {"2", state.range(0)}});
  Stability kappa{{"1", Rational(state.range(0))}, {"2", Rational(-1)}};
  for (auto _ : state) benchmark::DoNotOptimize(king_semistable_exists(q, g, kappa, 3));
}
BENCHMARK(BM_KingBruteForce)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

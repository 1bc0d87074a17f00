#include <sra3/engine.hpp>
#include <sra3/metrics.hpp>
#include <sra3/problems.hpp>

#include <benchmark/benchmark.h>

namespace
{

std::vector<sra3::ObjectiveVector> random_population(std::size_t count, std::size_t m, std::uint64_t seed)
{
  sra3::RandomSource rng(seed);
  std::vector<sra3::ObjectiveVector> pop(count, sra3::ObjectiveVector(m));
  for (auto& p : pop)
    for (auto& v : p)
      v = rng.uniform();
  return pop;
}

void BM_SelectCa(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pop = random_population(2 * n, 5, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::select_ca(pop, n, 0.025));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectCa)->RangeMultiplier(2)->Range(50, 400)->Complexity();

void BM_SelectCaRanked(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pop = random_population(2 * n, 5, 2);
  const auto fit = sra3::eps_fitness(sra3::IndicatorMatrix::epsilon(pop), 0.025);
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::select_ca_ranked(fit.wide, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectCaRanked)->RangeMultiplier(2)->Range(50, 400)->Complexity(benchmark::oNLogN);

void BM_SelectCaNormalized(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pop = random_population(2 * n, 5, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::select_ca_normalized(pop, n, 0.025));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectCaNormalized)->RangeMultiplier(2)->Range(50, 400)->Complexity();

void BM_SelectDa(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pop = random_population(2 * n, 5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::select_da(pop, n, true));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SelectDa)->RangeMultiplier(2)->Range(50, 400)->Complexity();

void BM_HypervolumeMonteCarlo(benchmark::State& state)
{
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto pop = random_population(200, m, 5);
  const sra3::ObjectiveVector ref(m, 1.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::hypervolume_monte_carlo(pop, ref, 100'000, 7, 1));
}
BENCHMARK(BM_HypervolumeMonteCarlo)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Evaluate(benchmark::State& state)
{
  const auto spec = sra3::ProblemSpec::make(static_cast<sra3::ProblemId>(state.range(0)), 10);
  sra3::RandomSource rng(6);
  std::vector<double> x(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i)
    x[i] = spec.bounds.lower[i] + rng.uniform() * (spec.bounds.upper[i] - spec.bounds.lower[i]);
  state.SetLabel(spec.name());
  for (auto _ : state)
    benchmark::DoNotOptimize(sra3::evaluate(spec, x));
}
BENCHMARK(BM_Evaluate)->DenseRange(0, 12);

} // namespace

BENCHMARK_MAIN();

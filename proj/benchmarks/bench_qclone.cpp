#include "qclone/qclone.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

qclone::AmplitudeMatrix sample_matrix(std::size_t N) {
  const double n = static_cast<double>(N);
  const double ab = std::sqrt(n / (2 * (1 + n)));
  return qclone::build(qclone::UniversalParams{ab, ab, N});
}

void BM_FourierDual(benchmark::State& state) {
  const auto a = sample_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qclone::fourier_dual(a));
}
BENCHMARK(BM_FourierDual)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

void BM_CloneMixture(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto a = sample_matrix(N);
  const auto psi = qclone::StateVector::basis(N, 0);
  for (auto _ : state) benchmark::DoNotOptimize(qclone::clone_outputs_mixture(a, psi));
}
BENCHMARK(BM_CloneMixture)->Arg(2)->Arg(3)->Arg(5);

void BM_CloneProjection(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  const auto a = sample_matrix(N);
  const auto psi = qclone::StateVector::basis(N, 0);
  for (auto _ : state) benchmark::DoNotOptimize(qclone::clone_by_projection(a, psi));
}
BENCHMARK(BM_CloneProjection)->Arg(2)->Arg(3)->Arg(5);

void BM_AsymTradeoff(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qclone::three_basis_asym_tradeoff(0.85));
}
BENCHMARK(BM_AsymTradeoff);

void BM_BruteForce(benchmark::State& state) {
  qclone::BruteForceOptions opts;
  opts.resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qclone::brute_force_optimal(qclone::Family::three_basis_asym, 0.85, opts));
}
BENCHMARK(BM_BruteForce)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

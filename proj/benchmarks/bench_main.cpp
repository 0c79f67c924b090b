#include <benchmark/benchmark.h>

#include <random>

#include "k3lat/checker.hpp"
#include "k3lat/enumeration.hpp"

namespace {

using namespace k3lat;

void BM_E8Roots(benchmark::State& state) {
  const IntegralLattice e8 = builtin(Builtin::E8);
  for (auto _ : state) benchmark::DoNotOptimize(count_norm(e8, Integer(-2)));
}
BENCHMARK(BM_E8Roots)->Unit(benchmark::kMillisecond);

void BM_E8ShortVectors(benchmark::State& state) {
  const IntegralLattice e8 = builtin(Builtin::E8);
  const Integer bound = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(e8, bound));
}
BENCHMARK(BM_E8ShortVectors)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> dist(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(12)->Arg(22)->Unit(benchmark::kMicrosecond);

void BM_DiscriminantGroupK3Complement(benchmark::State& state) {
  const IntegralLattice comp(gamma2_in_k3().complement_gram);
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_group(comp));
}
BENCHMARK(BM_DiscriminantGroupK3Complement)->Unit(benchmark::kMicrosecond);

void BM_BuildCase(benchmark::State& state) {
  const int sigma = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_case(sigma, Integer(3)));
}
BENCHMARK(BM_BuildCase)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  const CaseCertificate c = build_case(3, Integer(2));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(c));
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMillisecond);

void BM_Survey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(survey(state.range(0)));
}
BENCHMARK(BM_Survey)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

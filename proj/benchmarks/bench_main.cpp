#include <benchmark/benchmark.h>

#include <random>

#include "enriques_kit/constraints.hpp"
#include "enriques_kit/fixtures.hpp"
#include "enriques_kit/io.hpp"
#include "enriques_kit/polynomial.hpp"

using namespace enriques;

namespace {

std::vector<std::vector<IntVector>> random_cones(std::size_t dim, std::size_t rays, std::size_t count) {
  std::mt19937_64 rng(dim * 1000 + rays);
  std::uniform_int_distribution<long> entry(-4, 4);
  std::vector<std::vector<IntVector>> out;
  while (out.size() < count) {
    std::vector<IntVector> gens;
    while (gens.size() < rays) {
      IntVector r(dim);
      for (auto& x : r) x = entry(rng);
      r[0] = abs(r[0]) + 1;  // pointed: e_0 is positive on every generator
      gens.push_back(r);
    }
    out.push_back(std::move(gens));
  }
  return out;
}

void BM_DoubleDescription(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto rays = static_cast<std::size_t>(state.range(1));
  const auto cones = random_cones(dim, rays, 32);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto c = cone_from_rays(dim, cones[i++ % cones.size()]);
    benchmark::DoNotOptimize(c.halfspaces().size());
  }
}
BENCHMARK(BM_DoubleDescription)->Args({3, 6})->Args({5, 8})->Args({6, 16});

void BM_RoundTrip(benchmark::State& state) {
  const auto cones = random_cones(5, 8, 32);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto c = cone_from_rays(5, cones[i++ % cones.size()]);
    benchmark::DoNotOptimize(cone_from_halfspaces(5, c.halfspaces()) == c);
  }
}
BENCHMARK(BM_RoundTrip);

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(m).degree());
}
BENCHMARK(BM_CharacteristicPolynomial)->Arg(6)->Arg(11)->Arg(23);

void BM_CyclotomicProfileKummer(benchmark::State& state) {
  const auto psi = fixtures::kummer_psi();
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_profile(psi).exponent());
}
BENCHMARK(BM_CyclotomicProfileKummer);

void BM_AdmissibleIndices(benchmark::State& state) {
  const auto b2 = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_indices(b2).size());
}
BENCHMARK(BM_AdmissibleIndices)->Arg(7)->Arg(23)->Arg(24);

void BM_LefschetzSweep(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t zeros = 0;
    for (std::uint64_t n = 1; n <= 30; ++n)
      for (std::uint64_t d = 2; d <= 30; ++d) zeros += lefschetz_number(n, d, 1).is_zero();
    benchmark::DoNotOptimize(zeros);
  }
}
BENCHMARK(BM_LefschetzSweep);

void BM_VerifyTilingPell(benchmark::State& state) {
  const auto s = fixtures::pell_tiling();
  for (auto _ : state) benchmark::DoNotOptimize(io::run_scenario(s).covered_samples);
}
BENCHMARK(BM_VerifyTilingPell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels against their OpenMP versions. Set HNBOUND_THREADS
// to choose the team size.
#include <benchmark/benchmark.h>

#include <random>

#include "hnbound/graded_systems.hpp"
#include "hnbound/kernels.hpp"
#include "hnbound/lattices.hpp"

using namespace hnb;

namespace {

ToricSeries trapezoid() { return associated_trapezoid(FiberedSeries(6, 3, 1)); }

kernels::QuadraticForm form(int rank) {
  std::mt19937_64 rng(42);
  return kernels::decompose(random_integer_gram(rank, rng));
}

std::vector<long> poly() {
  std::vector<long> c(33);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = (k * 7 % 5) - 2;
  return c;
}

void BM_toric_rank_serial(benchmark::State& s) {
  ToricSeries t = trapezoid();
  for (auto _ : s) benchmark::DoNotOptimize(toric_rank_serial(t, s.range(0)));
}
void BM_toric_rank_omp(benchmark::State& s) {
  ToricSeries t = trapezoid();
  for (auto _ : s) benchmark::DoNotOptimize(toric_rank(t, s.range(0)));
}

void BM_short_vectors_serial(benchmark::State& s) {
  auto q = form(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::count_short_vectors_serial(q, 60, 1ull << 40));
}
void BM_short_vectors_omp(benchmark::State& s) {
  auto q = form(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(kernels::count_short_vectors(q, 60, 1ull << 40));
}

void BM_circle_grid_serial(benchmark::State& s) {
  auto g = kernels::CircleGrid::get(static_cast<int>(s.range(0)));
  auto c = poly();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::evaluate_circle_grid_serial(c, *g));
}
void BM_circle_grid_omp(benchmark::State& s) {
  auto g = kernels::CircleGrid::get(static_cast<int>(s.range(0)));
  auto c = poly();
  for (auto _ : s) benchmark::DoNotOptimize(kernels::evaluate_circle_grid(c, *g));
}

}  // namespace

BENCHMARK(BM_toric_rank_serial)->Arg(50)->Arg(200);
BENCHMARK(BM_toric_rank_omp)->Arg(50)->Arg(200);
BENCHMARK(BM_short_vectors_serial)->Arg(4)->Arg(6);
BENCHMARK(BM_short_vectors_omp)->Arg(4)->Arg(6);
BENCHMARK(BM_circle_grid_serial)->Arg(4096)->Arg(65536);
BENCHMARK(BM_circle_grid_omp)->Arg(4096)->Arg(65536);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "gpblend/gp_solver.hpp"
#include "gpblend/gradient.hpp"
#include "gpblend/pyramid.hpp"
#include "gpblend/reference.hpp"

using namespace gpblend;

namespace {

ImageF noise(int size, unsigned seed) {
  ImageF img(size, size, 3);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (double& v : img.data()) v = dist(rng);
  return img;
}

void BM_Downsample(benchmark::State& state) {
  const ImageF img = noise(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(downsample(img));
}

void BM_DownsampleReference(benchmark::State& state) {
  const ImageF img = noise(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::downsample(img));
}

void BM_Upsample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImageF img = noise(n / 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(upsample(img, n, n));
}

void BM_UpsampleReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImageF img = noise(n / 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::upsample(img, n, n));
}

void BM_DivGrad(benchmark::State& state) {
  const ImageF img = noise(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(divergence(gradients(img)));
}

void BM_DivGradReference(benchmark::State& state) {
  const ImageF img = noise(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::divergence(reference::gradients(img)));
}

void BM_SolveGp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImageF u = noise(n, 4), g = noise(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(solve_gp(u, g, GpParams{}));
}

void BM_SolveGpReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ImageF u = noise(n, 4), g = noise(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reference::solve_gp(u, g, GpParams{}));
}

}  // namespace

BENCHMARK(BM_Downsample)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DownsampleReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Upsample)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_UpsampleReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DivGrad)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DivGradReference)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveGp)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveGpReference)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

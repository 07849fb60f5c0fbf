#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rkm/ball_geometry.hpp"
#include "rkm/embedder.hpp"
#include "rkm/metrics.hpp"
#include "rkm/packing.hpp"

using namespace rkm;

namespace {

std::vector<DiskPoint> disk_sample(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u;
  std::vector<DiskPoint> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(std::polar(0.999 * std::sqrt(u(rng)), 6.283185307179586 * u(rng)));
  return out;
}

std::vector<BallPoint> ball_sample(std::size_t count, int n) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u;
  std::vector<BallPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> v(n);
    double len = 0.0;
    for (auto& c : v) {
      c = {g(rng), g(rng)};
      len += std::norm(c);
    }
    const double radius = 0.999 * std::pow(u(rng), 1.0 / (2 * n));
    for (auto& c : v) c *= radius / std::sqrt(len);
    out.emplace_back(std::move(v));
  }
  return out;
}

void BM_DirichletKernel(benchmark::State& state) {
  const auto pts = disk_sample(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_kernel(pts[i % 1024], pts[(i + 1) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_DirichletKernel);

void BM_DeltaDirichlet(benchmark::State& state) {
  const auto pts = disk_sample(1024);
  const auto id = KernelId::dirichlet();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta(id, pts[i % 1024], pts[(i + 7) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_DeltaDirichlet);

void BM_RhoBall(benchmark::State& state) {
  const auto pts = ball_sample(1024, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho(pts[i % 1024], pts[(i + 3) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_RhoBall)->Arg(1)->Arg(3)->Arg(8);

void BM_Automorphism(benchmark::State& state) {
  const auto pts = ball_sample(1024, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ball_automorphism(pts[i % 1024], pts[(i + 5) % 1024]));
    ++i;
  }
}
BENCHMARK(BM_Automorphism)->Arg(2)->Arg(8);

void BM_Certificate(benchmark::State& state) {
  double K = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certificate(4, K));
    K = K > 190.0 ? 5.0 : K + 0.25;
  }
}
BENCHMARK(BM_Certificate);

void BM_ThresholdSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(threshold_sweep(static_cast<int>(state.range(0)), 200.0));
}
BENCHMARK(BM_ThresholdSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MonteCarloVolume(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mc_invariant_volume(0.9, 2, 100000, 3));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_MonteCarloVolume)->Unit(benchmark::kMillisecond);

void BM_StressGradient(benchmark::State& state) {
  const auto problem = build_problem(ring_configuration(4.0, static_cast<std::size_t>(state.range(0))), 2);
  std::vector<double> params(problem.parameter_count(), 0.1);
  for (std::size_t k = 0; k < params.size(); ++k) params[k] = 0.05 * static_cast<double>(k % 7) - 0.15;
  std::vector<double> grad(params.size());
  for (auto _ : state) benchmark::DoNotOptimize(stress_and_gradient(problem, params, grad));
}
BENCHMARK(BM_StressGradient)->Arg(8)->Arg(32);

void BM_EmbedRing(benchmark::State& state) {
  EmbeddingSettings settings;
  settings.restarts = 10;
  settings.seed = 7;
  const auto problem = build_problem(ring_configuration(4.0, 8), 2, settings);
  for (auto _ : state) benchmark::DoNotOptimize(solve(problem));
}
BENCHMARK(BM_EmbedRing)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

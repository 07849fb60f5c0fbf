#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rkm/ball_geometry.hpp"
#include "rkm/embedder.hpp"
#include "rkm/metrics.hpp"
#include "rkm/packing.hpp"

using namespace rkm;

namespace {

EmbeddingSettings quick(int restarts = 4, std::uint64_t seed = 1) {
  EmbeddingSettings s;
  s.restarts = restarts;
  s.seed = seed;
  s.max_iters = 3000;
  return s;
}

std::vector<double> random_params(std::mt19937_64& rng, std::size_t count) {
  std::normal_distribution<double> g(0.0, 0.6);
  std::vector<double> p(count);
  for (auto& v : p) v = g(rng);
  return p;
}

}  // namespace

TEST(Embedder, ParameterMapRoundTrip) {
  std::mt19937_64 rng(31);
  std::vector<BallPoint> pts;
  for (int i = 0; i < 5; ++i) pts.emplace_back(oracle::random_ball(rng, 3, 0.99));
  const auto back = to_points(to_parameters(pts), 3);
  ASSERT_EQ(back.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int k = 0; k < 3; ++k) EXPECT_LT(std::abs(back[i][k] - pts[i][k]), 1e-13);
}

TEST(Embedder, HugeParametersStayInsideTheBall) {
  const std::vector<double> params = {1e200, -1e200, 1e17, 0.0};
  for (const auto& p : to_points(params, 1)) EXPECT_LT(p.norm_sq(), 1.0);
}

TEST(Embedder, TwoPointProblemIsSolvedExactly) {
  const std::vector<DiskPoint> src = {DiskPoint(0.2, 0.1), DiskPoint(-0.6, 0.3)};
  const auto problem = build_problem(src, 2, quick());
  const auto result = solve(problem);
  EXPECT_LT(result.stress, 1e-20);
  EXPECT_NEAR(rho(result.points[0], result.points[1]), delta(KernelId::dirichlet(), src[0], src[1]), 1e-10);
}

TEST(Embedder, PlantedBallConfigurationIsRecovered) {
  std::mt19937_64 rng(32);
  const int n = 2;
  const std::size_t m = 5;
  std::vector<BallPoint> planted;
  for (std::size_t i = 0; i < m; ++i) planted.emplace_back(oracle::random_ball(rng, n, 0.8));
  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) d[i * m + j] = rho(planted[i], planted[j]);
  auto settings = quick(10, 3);
  const auto result = solve(build_problem_from_distances(d, m, n, settings));
  EXPECT_LT(result.stress, 1e-8);
  EXPECT_LT(result.max_abs_error, 1e-4);
}

TEST(Embedder, AnalyticGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(33);
  const auto pts = ring_configuration(3.0, 6);
  for (int n : {1, 2, 3}) {
    const auto problem = build_problem(pts, n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto params = random_params(rng, problem.parameter_count());
      EXPECT_LT(gradient_check(problem, params, 1e-6), 1e-6) << n;
    }
  }
}

TEST(Embedder, FiniteDifferenceErrorFallsWithStep) {
  std::mt19937_64 rng(34);
  const auto problem = build_problem(ring_configuration(2.0, 5), 2);
  const auto params = random_params(rng, problem.parameter_count());
  const double coarse = gradient_check(problem, params, 1e-2);
  const double fine = gradient_check(problem, params, 1e-3);
  EXPECT_LT(fine, coarse / 20.0);
}

TEST(Embedder, StressIsInvariantUnderAutomorphisms) {
  std::mt19937_64 rng(35);
  const auto problem = build_problem(ring_configuration(2.0, 6), 2);
  std::vector<BallPoint> pts;
  for (int i = 0; i < 6; ++i) pts.emplace_back(oracle::random_ball(rng, 2, 0.9));
  const double base = stress(problem, pts);
  for (int t = 0; t < 20; ++t) {
    const BallPoint a(oracle::random_ball(rng, 2, 0.9));
    std::vector<BallPoint> moved;
    for (const auto& p : pts) moved.push_back(ball_automorphism(a, p));
    EXPECT_NEAR(stress(problem, moved), base, 1e-10 * std::max(1.0, base));
  }
}

TEST(Embedder, StressAndGradientAgreeWithStress) {
  std::mt19937_64 rng(36);
  const auto problem = build_problem(ring_configuration(4.0, 7), 3);
  const auto params = random_params(rng, problem.parameter_count());
  std::vector<double> grad(params.size());
  EXPECT_NEAR(stress_and_gradient(problem, params, grad), stress(problem, to_points(params, 3)), 1e-13);
}

TEST(Embedder, DeterministicAcrossParallelism) {
  auto s1 = quick(6, 9);
  auto s4 = s1;
  s4.parallelism = 4;
  const auto pts = ring_configuration(3.0, 6);
  const auto a = solve(build_problem(pts, 2, s1));
  const auto b = solve(build_problem(pts, 2, s4));
  EXPECT_EQ(a.stress, b.stress);
  EXPECT_EQ(a.best_restart, b.best_restart);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i], b.points[i]);
}

TEST(Embedder, BestRestartIsNoWorseThanAnyRestart) {
  const auto result = solve(build_problem(ring_configuration(3.0, 7), 2, quick(8, 4)));
  ASSERT_EQ(result.restarts.size(), 8u);
  EXPECT_EQ(result.restarts_used, 8);
  for (const auto& r : result.restarts) EXPECT_LE(result.stress, r.stress);
  EXPECT_EQ(result.restarts[static_cast<std::size_t>(result.best_restart)].stress, result.stress);
}

TEST(Embedder, RingStressIsSmallAndDistortionNearOne) {
  const auto result = solve(build_problem(ring_configuration(4.0, 8), 2, quick(10, 7)));
  EXPECT_LT(result.stress, 1e-3);
  EXPECT_GE(result.max_rel_distortion, 1.0);
  EXPECT_LT(result.max_rel_distortion, 1.05);
}

TEST(Embedder, RejectsBadProblems) {
  const std::vector<DiskPoint> one = {DiskPoint(0.1, 0.0)};
  EXPECT_THROW(build_problem(one, 2), DomainError);
  const std::vector<DiskPoint> dup = {DiskPoint(0.1, 0.0), DiskPoint(0.1, 0.0)};
  EXPECT_THROW(build_problem(dup, 2), DomainError);
  const std::vector<DiskPoint> ok = {DiskPoint(0.1, 0.0), DiskPoint(0.2, 0.0)};
  EXPECT_THROW(build_problem(ok, 0), DomainError);
  EXPECT_THROW(build_problem_from_distances({0.0, 0.5, 0.4, 0.0}, 2, 1), DomainError);
  EXPECT_THROW(build_problem_from_distances({0.0, 1.0, 1.0, 0.0}, 2, 1), DomainError);
  EXPECT_THROW(build_problem_from_distances({0.0, 0.5, 0.5}, 2, 1), InvalidInput);
}

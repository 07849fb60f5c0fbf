#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rkm/asymptotics.hpp"
#include "rkm/metrics.hpp"

using namespace rkm;

TEST(Metrics, IdentityCase) {
  const DiskPoint x(0.3, -0.4);
  for (const auto& id : {KernelId::dirichlet(), KernelId::drury_arveson(1), KernelId::log_power(2),
                         KernelId::dirichlet_alpha(0.5)})
    EXPECT_EQ(delta(id, x, x), 0.0);
  const BallPoint b({0.1, Complex(0.2, 0.3)});
  EXPECT_EQ(delta(KernelId::drury_arveson(2), b, b), 0.0);
  EXPECT_EQ(rho(b, b), 0.0);
}

TEST(Metrics, DirichletCenterDistanceAtKFour) {
  // h(z, z) = K / z^2, so 1 - delta^2 = z^2 / K = (1 - e^-4) / 4 exactly;
  // sqrt(1 - 1/4) = 0.8660254 is only the large-K value.
  const auto s = boundary_scale(4.0);
  const double d = delta(KernelId::dirichlet(), DiskPoint(), DiskPoint(s.z, 0.0));
  EXPECT_NEAR(d, std::sqrt(1.0 - (1.0 - std::exp(-4.0)) / 4.0), 1e-14);
  EXPECT_NEAR(d, 0.86866502, 5e-9);
  EXPECT_NEAR(d, 0.8660254, 3e-3);
}

TEST(Metrics, FundamentalIdentityExample) {
  const DiskPoint z(0.5, 0.0), w(0.0, -0.3);
  const double generic = delta(KernelId::drury_arveson(1), z, w);
  // |(z - w)/(1 - conj(z) w)| = |0.5 + 0.3i| / |1 + 0.15i|
  const double ref = std::sqrt(0.34 / (1.0 + 0.0225));
  EXPECT_NEAR(generic, ref, 1e-15);
  EXPECT_NEAR(generic, 0.5766, 5e-5);
  EXPECT_NEAR(rho(z, w), ref, 1e-15);
}

TEST(Metrics, RhoExamples) {
  const BallPoint z({0.3, Complex(0.1, -0.4)});
  EXPECT_NEAR(rho(BallPoint::origin(2), z), std::sqrt(z.norm_sq()), 1e-15);
  EXPECT_NEAR(rho(DiskPoint(0.5, 0), DiskPoint(-0.5, 0)), 0.8, 1e-15);
  EXPECT_NEAR(rho(BallPoint({0.5}), BallPoint({-0.5})), 0.8, 1e-15);
  EXPECT_THROW(rho(BallPoint({0.5}), BallPoint({0.1, 0.1})), InvalidInput);
}

TEST(Metrics, FundamentalIdentityRandom) {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const DiskPoint z(oracle::random_disk(rng)), w(oracle::random_disk(rng));
    worst = std::max(worst, std::abs(delta(KernelId::drury_arveson(1), z, w) - rho(z, w)));
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Metrics, GenericDeltaMatchesClosedFormRho) {
  std::mt19937_64 rng(12);
  for (int n : {1, 2, 3, 8}) {
    double worst = 0.0;
    for (int i = 0; i < 5000; ++i) {
      const BallPoint z(oracle::random_ball(rng, n)), w(oracle::random_ball(rng, n));
      worst = std::max(worst, std::abs(delta(KernelId::drury_arveson(n), z, w) - rho(z, w)));
    }
    EXPECT_LT(worst, 1e-12) << "n=" << n;
  }
}

TEST(Metrics, RangeAndClampDiagnostics) {
  std::mt19937_64 rng(13);
  for (const auto& id : {KernelId::dirichlet(), KernelId::log_power(3), KernelId::dirichlet_alpha(0.2)})
    for (int i = 0; i < 5000; ++i) {
      const DiskPoint z(oracle::random_disk(rng)), w(oracle::random_disk(rng));
      DeltaDiagnostics diag;
      const double d = delta(id, z, w, &diag);
      EXPECT_GE(d, 0.0);
      EXPECT_LE(d, 1.0);
      EXPECT_GE(diag.one_minus_ratio, -1e-13);
    }
  // nearly coincident points: rounding may push 1 - ratio below zero
  DeltaDiagnostics diag;
  const DiskPoint a(0.6, 0.2), b(0.6 + 1e-17, 0.2);
  EXPECT_GE(delta(KernelId::dirichlet(), a, b, &diag), 0.0);
  EXPECT_GE(diag.one_minus_ratio, -1e-13);
}

TEST(Metrics, DistinctPointsHavePositiveDistance) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 5000; ++i) {
    const DiskPoint z(oracle::random_disk(rng)), w(oracle::random_disk(rng));
    if (z == w) continue;
    EXPECT_GT(delta(KernelId::dirichlet(), z, w), 0.0);
  }
}

TEST(Metrics, LogMagnitudePathNearBoundary) {
  const auto z = DiskPoint::from_defect(1e-30, 0.0);
  const auto w = DiskPoint::from_defect(1e-30, 2e-30);
  DeltaDiagnostics diag;
  const double d = delta(KernelId::drury_arveson(1), z, w, &diag);
  EXPECT_TRUE(diag.log_magnitude_path);
  EXPECT_TRUE(diag.near_boundary);
  // rho = |z - w| / |1 - conj(z) w|; here 1 - conj(z)w = e^-K (1 - 2i) to leading order
  EXPECT_NEAR(d, 2.0 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(rho(z, w), 2.0 / std::sqrt(5.0), 1e-12);
}

TEST(Metrics, RescalingDoesNotChangeDelta) {
  std::mt19937_64 rng(15);
  EXPECT_TRUE(delta_rescale_check(KernelId::dirichlet(), 1.0, 1.0, DiskPoint(0.2, 0.1), DiskPoint(-0.5, 0.3)));
  for (int i = 0; i < 500; ++i) {
    const DiskPoint x(oracle::random_disk(rng)), w(oracle::random_disk(rng));
    const double sx = 1.0 + std::norm(x.value());
    const double sw = 1.0 + std::norm(w.value());
    EXPECT_TRUE(delta_rescale_check(KernelId::dirichlet(), sx, sw, x, w));
    EXPECT_TRUE(delta_rescale_check(KernelId::dirichlet(), 1e30, 1e30, x, w));
    EXPECT_TRUE(delta_rescale_check(KernelId::log_power(2), 1e30, 3.0, x, w));
  }
  EXPECT_THROW(delta_rescale_check(KernelId::dirichlet(), 0.0, 1.0, DiskPoint(), DiskPoint(0.1, 0)), DomainError);
}

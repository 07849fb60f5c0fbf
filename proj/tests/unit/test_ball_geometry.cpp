#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rkm/ball_geometry.hpp"
#include "rkm/metrics.hpp"

using namespace rkm;

TEST(BallGeometry, AutomorphismDiskExample) {
  const BallPoint p = ball_automorphism(BallPoint({0.5}), BallPoint({0.25}));
  EXPECT_NEAR(p[0].real(), 0.25 / 0.875, 1e-15);
  EXPECT_NEAR(p[0].real(), 0.2857143, 5e-8);
  EXPECT_NEAR(p[0].imag(), 0.0, 1e-16);
}

TEST(BallGeometry, AutomorphismSwapsZeroAndA) {
  const BallPoint a({0.3, Complex(0.1, -0.5)});
  const BallPoint at_zero = ball_automorphism(a, BallPoint::origin(2));
  const BallPoint at_a = ball_automorphism(a, a);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_LT(std::abs(at_zero[i] - a[i]), 1e-15);
    EXPECT_LT(std::abs(at_a[i]), 1e-15);
  }
}

TEST(BallGeometry, AutomorphismAtOriginIsIdentity) {
  const BallPoint z({0.3, Complex(0.1, -0.5)});
  EXPECT_EQ(ball_automorphism(BallPoint::origin(2), z), z);
}

TEST(BallGeometry, AutomorphismInvolutionAndInvariance) {
  std::mt19937_64 rng(21);
  for (int n : {1, 2, 4}) {
    for (int i = 0; i < 2000; ++i) {
      const BallPoint a(oracle::random_ball(rng, n, 0.95));
      const BallPoint z(oracle::random_ball(rng, n, 0.95));
      const BallPoint w(oracle::random_ball(rng, n, 0.95));
      const BallPoint back = ball_automorphism(a, ball_automorphism(a, z));
      for (int k = 0; k < n; ++k) EXPECT_LT(std::abs(back[k] - z[k]), 1e-11);
      const double before = rho(z, w);
      const double after = rho(ball_automorphism(a, z), ball_automorphism(a, w));
      EXPECT_NEAR(before, after, 1e-10);
      // rho(0, phi_a(z)) = rho(a, z)
      EXPECT_NEAR(std::sqrt(ball_automorphism(a, z).norm_sq()), rho(a, z), 1e-10);
    }
  }
}

TEST(BallGeometry, AutomorphismDimensionMismatch) {
  EXPECT_THROW(ball_automorphism(BallPoint({0.1}), BallPoint({0.1, 0.2})), InvalidInput);
}

TEST(BallGeometry, StrengthenedTriangleExamples) {
  EXPECT_DOUBLE_EQ(strengthened_triangle_bound(0.5, 0.5), 0.8);
  EXPECT_EQ(strengthened_triangle_bound(0.0, 0.3), 0.3);
  EXPECT_LE(strengthened_triangle_bound(0.9999, 0.9999), 1.0);
  EXPECT_THROW(strengthened_triangle_bound(-0.1, 0.3), DomainError);
  EXPECT_THROW(strengthened_triangle_bound(0.1, 1.0), DomainError);
}

TEST(BallGeometry, StrengthenedTriangleHoldsForRandomTriples) {
  std::mt19937_64 rng(22);
  for (int n : {1, 3}) {
    for (int i = 0; i < 10000; ++i) {
      const BallPoint x(oracle::random_ball(rng, n)), y(oracle::random_ball(rng, n)),
          z(oracle::random_ball(rng, n));
      const double bound = strengthened_triangle_bound(rho(x, y), rho(y, z));
      EXPECT_LE(rho(x, z), bound + 1e-12);
      EXPECT_LE(bound, rho(x, y) + rho(y, z) + 1e-15);
    }
  }
}

TEST(BallGeometry, PseudoBallVolumeExamples) {
  EXPECT_NEAR(pseudo_ball_volume(0.5, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(pseudo_ball_volume(0.9, 2), std::pow(0.81 / 0.19, 2), 1e-12);
  EXPECT_NEAR(pseudo_ball_volume(0.9, 2), 18.174515, 5e-7);
  EXPECT_EQ(pseudo_ball_volume(0.0, 3), 0.0);
  EXPECT_THROW(pseudo_ball_volume(1.0, 1), DomainError);
  EXPECT_THROW(pseudo_ball_volume(0.5, 0), DomainError);
  EXPECT_NEAR(log_pseudo_ball_volume(0.9, 2), std::log(pseudo_ball_volume(0.9, 2)), 1e-14);
}

TEST(BallGeometry, VolumeMatchesQuadratureOracle) {
  for (int n : {1, 2, 3, 5})
    for (double r : {0.1, 0.5, 0.9, 0.99}) {
      const double ref = oracle::radial_volume(r, n);
      EXPECT_NEAR(pseudo_ball_volume(r, n), ref, 1e-9 * ref) << "n=" << n << " r=" << r;
    }
}

TEST(BallGeometry, VolumeAsymptotics) {
  EXPECT_NEAR(pseudo_ball_volume(1e-4, 2) / std::pow(1e-4, 4), 1.0, 1e-7);
  for (double r : {0.999, 0.99999})
    EXPECT_NEAR(pseudo_ball_volume(r, 3) * std::pow(1 - r * r, 3), std::pow(r, 6), 1e-10);
}

TEST(BallGeometry, MonteCarloMatchesClosedForm) {
  for (int n : {1, 2, 3})
    for (double r : {0.3, 0.6, 0.9}) {
      const auto mc = mc_invariant_volume(r, n, 200000, 5);
      const double exact = pseudo_ball_volume(r, n);
      EXPECT_LT(std::abs(mc.estimate - exact), 5.0 * mc.std_error + 1e-12) << n << " " << r;
      EXPECT_LT(std::abs(mc.estimate - exact), 0.01 * exact) << n << " " << r;
    }
}

TEST(BallGeometry, MonteCarloStratifiedNearBoundary) {
  const auto mc = mc_invariant_volume(0.99, 2, 200000, 9);
  const double exact = pseudo_ball_volume(0.99, 2);
  EXPECT_LT(std::abs(mc.estimate - exact), 0.01 * exact);
}

TEST(BallGeometry, MonteCarloDeterministicAcrossThreads) {
  const auto one = mc_invariant_volume(0.7, 2, 50000, 42, 1);
  const auto four = mc_invariant_volume(0.7, 2, 50000, 42, 4);
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.std_error, four.std_error);
  EXPECT_EQ(one.samples, 50000u);
  EXPECT_NE(one.estimate, mc_invariant_volume(0.7, 2, 50000, 43, 1).estimate);
}

TEST(BallGeometry, MonteCarloVolumeIsLocationIndependent) {
  const double exact = pseudo_ball_volume(0.5, 2);
  for (const BallPoint& c : {BallPoint::origin(2), BallPoint({0.6, 0.0}), BallPoint({Complex(0, 0.4), 0.5})}) {
    const auto mc = mc_invariant_volume_at(c, 0.5, 400000, 17);
    EXPECT_LT(std::abs(mc.estimate - exact), 5.0 * mc.std_error) << to_string(c);
    EXPECT_LT(std::abs(mc.estimate - exact), 0.02 * exact) << to_string(c);
  }
}

TEST(BallGeometry, MonteCarloRejectsBadArguments) {
  EXPECT_THROW(mc_invariant_volume(1.0, 1, 100, 1), DomainError);
  EXPECT_THROW(mc_invariant_volume(0.5, 0, 100, 1), DomainError);
  EXPECT_THROW(mc_invariant_volume(0.5, 1, 0, 1), DomainError);
}

#pragma once

#include <cstdint>

#include "rkm/points.hpp"

namespace rkm {

/// Involutive automorphism of the ball exchanging 0 and a:
///
///   phi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>),  s_a = sqrt(1 - |a|^2),
///
/// with P_a the orthogonal projection onto span{a} and Q_a = I - P_a. For
/// n = 1 this is (a - z) / (1 - conj(a) z). phi_0 is taken to be the identity.
BallPoint ball_automorphism(const BallPoint& a, const BallPoint& z);

/// (d1 + d2) / (1 + d1 d2); bounds rho(x, z) given rho(x, y) = d1, rho(y, z) = d2.
double strengthened_triangle_bound(double d1, double d2);

/// Invariant volume r^{2n} / (1 - r^2)^n of a pseudohyperbolic ball of radius r in B^n.
double pseudo_ball_volume(double r, int n);
/// n * (2 log r - log(1 - r^2)); finite where pseudo_ball_volume would overflow.
double log_pseudo_ball_volume(double r, int n);

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Fixed number of independent random streams a Monte Carlo budget is split
/// into; results do not depend on how many threads run them.
inline constexpr int kMonteCarloStreams = 16;

/// Monte Carlo estimate of  n!/pi^n * integral_{|z|<r} dm(z) / (1 - |z|^2)^{n+1}.
/// Uniform samples of the Euclidean r-ball (radially stratified when r > 0.95),
/// weighted by (1 - |z|^2)^{-(n+1)}.
MonteCarloEstimate mc_invariant_volume(double r, int n, std::uint64_t samples, std::uint64_t seed,
                                       int parallelism = 1);

/// Same integral over the pseudohyperbolic ball {z : rho(z, center) < r}.
MonteCarloEstimate mc_invariant_volume_at(const BallPoint& center, double r, std::uint64_t samples,
                                          std::uint64_t seed, int parallelism = 1);

}  // namespace rkm

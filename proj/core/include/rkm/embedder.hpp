#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rkm/points.hpp"

namespace rkm {

struct EmbeddingSettings {
  int restarts = 20;
  int max_iters = 5000;
  /// Stop once the Euclidean norm of the stress gradient falls below this.
  double tolerance = 1e-10;
  std::uint64_t seed = 0;
  int parallelism = 1;
};

/// Target distances for a map of m source points into the ball of C^n.
struct EmbeddingProblem {
  std::vector<DiskPoint> source_points;  // empty for problems built from a matrix
  int target_dim = 1;
  std::size_t size = 0;
  std::vector<double> distances;  // row-major size x size
  EmbeddingSettings settings;

  double distance(std::size_t i, std::size_t j) const { return distances[i * size + j]; }
  /// Length of the unconstrained parameter vector, size * 2n.
  std::size_t parameter_count() const { return size * 2 * static_cast<std::size_t>(target_dim); }
};

/// Distances delta_D(z_i, z_j) of the given disk points. Rejects fewer than two
/// points, duplicates and n < 1.
EmbeddingProblem build_problem(std::span<const DiskPoint> points, int n, EmbeddingSettings settings = {});

/// Problem from an explicit symmetric matrix with zero diagonal and
/// off-diagonal entries in (0, 1).
EmbeddingProblem build_problem_from_distances(std::vector<double> distances, std::size_t size, int n,
                                              EmbeddingSettings settings = {});

struct RestartSummary {
  int restart = 0;
  double stress = 0.0;
  int iterations = 0;
  bool converged = false;
  bool non_finite = false;
};

struct EmbeddingResult {
  std::vector<BallPoint> points;
  double stress = 0.0;
  double max_abs_error = 0.0;
  double max_rel_distortion = 1.0;
  double gradient_norm = 0.0;
  int iterations_used = 0;
  int restarts_used = 0;
  int best_restart = -1;
  bool converged = false;
  std::vector<RestartSummary> restarts;
};

/// Ball points <-> unconstrained parameters: z = y / sqrt(1 + |y|^2), y in R^{2n}.
std::vector<double> to_parameters(std::span<const BallPoint> points);
std::vector<BallPoint> to_points(std::span<const double> params, int n);

/// sum_{i<j} (rho(p_i, p_j) - d_ij)^2
double stress(const EmbeddingProblem& problem, std::span<const BallPoint> points);

/// Stress at parameters `params`; fills `grad` (same length) with its gradient.
double stress_and_gradient(const EmbeddingProblem& problem, std::span<const double> params,
                           std::span<double> grad);

/// Max over components of |analytic - central difference| / max(|analytic|, |fd|, 1e-8).
double gradient_check(const EmbeddingProblem& problem, std::span<const double> params, double h);

/// Multi-start L-BFGS minimisation of the stress; best restart wins, ties to the
/// lowest restart index. Deterministic for a fixed seed at any parallelism.
EmbeddingResult solve(const EmbeddingProblem& problem);

}  // namespace rkm

#pragma once

#include <span>
#include <string>
#include <vector>

#include "rkm/kernels.hpp"

namespace rkm {

/// Laplacians are the real two-dimensional Laplacian d^2/dx^2 + d^2/dy^2 (= 4 d dbar).
/// Under this normalization the Hardy (DA_1) kernel has curvature exactly -1.
inline constexpr const char* kLaplacianNormalization = "laplacian=dxx+dyy";

inline constexpr double kMinCurvatureStep = 1e-6;
inline constexpr double kMaxCurvatureStep = 1e-2;

/// alpha^2 = Laplacian of log k(z, z), five-point stencil with spacing `step`.
/// Requires 1 - |z| >= 4 step.
double metric_density(const KernelId& id, const DiskPoint& z, double step);

/// kappa = -Laplacian(log alpha) / alpha^2 from nested five-point stencils, both
/// with spacing `step` and no extrapolation. Requires 1 - |z| >= 4 step.
double curvature_at_step(const KernelId& id, const DiskPoint& z, double step);

struct CurvatureSample {
  DiskPoint z;
  double alpha_sq = 0.0;
  double kappa = 0.0;
  double step = 0.0;
  double est_error = 0.0;
  bool valid = true;
  std::string kernel_tag;
};

/// Richardson-extrapolated density and curvature from spacings `step` and
/// step/2; est_error = |kappa_step - kappa_{step/2}| / 3. Requires 1 - |z| >= 8 step.
/// A non-positive density marks the sample invalid instead of throwing.
CurvatureSample gaussian_curvature(const KernelId& id, const DiskPoint& z, double step);

std::vector<CurvatureSample> sample_curvature(const KernelId& id, std::span<const DiskPoint> points,
                                              double step, int parallelism = 1);

}  // namespace rkm

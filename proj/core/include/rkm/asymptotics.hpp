#pragma once

#include "rkm/points.hpp"

namespace rkm {

/// Base point z = 1 - sigma of the boundary ring at log scale K, where
/// 2 sigma - sigma^2 = e^{-K}, i.e. 1 - z^2 = e^{-K}.
struct BoundaryScale {
  double K = 0.0;
  double sigma = 0.0;
  double z = 0.0;
  double defect = 0.0;  // 1 - z^2 = e^{-K}, held exactly

  /// z e^{i angle} as a disk point carrying the exact defect.
  DiskPoint point(double angle = 0.0) const { return DiskPoint::from_defect(defect, angle); }
};

enum class ScaleRegime {
  Asymptotic,  // K > 1
  Relaxed,     // K > 0, for arithmetic checks outside the asymptotic regime
};

BoundaryScale boundary_scale(double K, ScaleRegime regime = ScaleRegime::Asymptotic);

/// Leading-order distance sqrt(1 - 1/K) from 0 to the ring point.
double center_distance_dirichlet(double K);

/// delta_D(0, z(K)) through the kernel path. Since h(z, z) = K / z^2 this is
/// sqrt(1 - (1 - e^{-K}) / K); it agrees with the leading-order value only up
/// to e^{-K} / K.
double center_distance_dirichlet_exact(double K);

/// A = Re log(1 - i/2) = ln(5/4) / 2.
double rotation_constant_A();
/// B = Im log(1 - i/2) = -atan(1/2).
double rotation_constant_B();

struct RotationEstimate {
  double K = 0.0;
  /// 1 - delta_D^2(z, z e^{i sigma}) from the Dirichlet kernel.
  double exact_one_minus_delta_sq = 0.0;
  double leading_constant_A = 0.0;
  /// exact - (1 - 2A/K); O(1/K^2).
  double remainder = 0.0;
  /// delta_D^2(z, z e^{i sigma}), computed without the 1 - (...) cancellation.
  double delta_sq = 0.0;
};

/// How far the rotation z -> z e^{i sigma} moves the ring point in delta_D. Requires K >= 5.
RotationEstimate rotation_displacement(double K);

/// delta_{H_m}(0, z(K)) for the log-power kernel h^m. Since h(z, z)^m = (K/z^2)^m,
/// 1 - delta^2 = (z^2 / K)^m.
double logpower_center_distance(double K, int m);

}  // namespace rkm

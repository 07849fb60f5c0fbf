#include "rkm/asymptotics.hpp"

#include <cmath>

#include "rkm/kernels.hpp"
#include "rkm/metrics.hpp"

namespace rkm {

BoundaryScale boundary_scale(double K, ScaleRegime regime) {
  const double lower = regime == ScaleRegime::Asymptotic ? 1.0 : 0.0;
  if (!(K > lower) || !std::isfinite(K))
    throw DomainError("boundary scale needs K > " + std::to_string(static_cast<int>(lower)));
  BoundaryScale s;
  s.K = K;
  s.defect = std::exp(-K);
  // 1 - sqrt(1 - x) = x / (1 + sqrt(1 - x))
  s.sigma = s.defect / (1.0 + std::sqrt(1.0 - s.defect));
  s.z = 1.0 - s.sigma;
  return s;
}

double center_distance_dirichlet(double K) {
  if (!(K > 1.0)) throw DomainError("center distance needs K > 1");
  return std::sqrt(1.0 - 1.0 / K);
}

double center_distance_dirichlet_exact(double K) {
  const auto s = boundary_scale(K);
  return delta(KernelId::dirichlet(), DiskPoint(), s.point());
}

double rotation_constant_A() { return std::log(Complex(1.0, -0.5)).real(); }
double rotation_constant_B() { return std::log(Complex(1.0, -0.5)).imag(); }

RotationEstimate rotation_displacement(double K) {
  if (!(K >= 5.0)) throw DomainError("rotation displacement expansion needs K >= 5");
  const auto s = boundary_scale(K);
  const DiskPoint base = s.point();
  DeltaDiagnostics diag;
  delta(KernelId::dirichlet(), base, base.rotated(s.sigma), &diag);
  RotationEstimate out;
  out.K = K;
  out.delta_sq = diag.one_minus_ratio;
  out.exact_one_minus_delta_sq = 1.0 - diag.one_minus_ratio;
  out.leading_constant_A = rotation_constant_A();
  out.remainder = 2.0 * out.leading_constant_A / K - out.delta_sq;
  return out;
}

double logpower_center_distance(double K, int m) {
  const auto s = boundary_scale(K);
  return delta(KernelId::log_power(m), DiskPoint(), s.point());
}

}  // namespace rkm

#pragma once

#include "rkm/kernels.hpp"

namespace rkm {

/// Points closer than this to the unit sphere are handled in log-magnitude form.
inline constexpr double kLogPathDistance = 1e-8;

struct DeltaDiagnostics {
  /// 1 - |<k_x, k_w>|^2 / (|k_x|^2 |k_w|^2) before clamping at zero.
  double one_minus_ratio = 0.0;
  bool clamped = false;
  bool log_magnitude_path = false;
  bool near_boundary = false;
};

/// Kernel metric sqrt(1 - |k(x,w)|^2 / (k(x,x) k(w,w))), in [0, 1].
double delta(const KernelId& id, const DiskPoint& x, const DiskPoint& w,
             DeltaDiagnostics* diag = nullptr);
double delta(const KernelId& id, const BallPoint& x, const BallPoint& w,
             DeltaDiagnostics* diag = nullptr);

/// Pseudohyperbolic distance |(z - w) / (1 - conj(z) w)| on the disk.
double rho(const DiskPoint& z, const DiskPoint& w);

/// Pseudohyperbolic distance on the ball of C^n, evaluated as
///   rho^2 = (|z - w|^2 - sum_{i<j} |z_i w_j - z_j w_i|^2) / |1 - <z, w>|^2,
/// which is algebraically equal to 1 - (1-|z|^2)(1-|w|^2)/|1-<z,w>|^2 but
/// avoids the cancellation in the latter. For n = 1 it reduces to the disk formula.
double rho(const BallPoint& z, const BallPoint& w);

/// Whether delta is unchanged (within 1e-13) when the kernel is replaced by
/// scale_x * scale_w * k(x, w). The rescaled kernel is evaluated in long double
/// so that scales as large as 1e30 do not overflow.
bool delta_rescale_check(const KernelId& id, double scale_x, double scale_w,
                         const DiskPoint& x, const DiskPoint& w);

}  // namespace rkm

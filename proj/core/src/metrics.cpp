#include "rkm/metrics.hpp"

#include <cmath>

namespace rkm {

namespace {

bool within_log_band(const DiskPoint& p) {
  return p.defect() / (1.0 + p.modulus()) < kLogPathDistance;
}

bool within_log_band(const BallPoint& p) {
  return p.defect() / (1.0 + std::sqrt(p.norm_sq())) < kLogPathDistance;
}

double finish(double one_minus_ratio, bool log_path, bool near_boundary, DeltaDiagnostics* diag) {
  if (!std::isfinite(one_minus_ratio)) throw DomainError("kernel value is not finite");
  const bool clamped = one_minus_ratio < 0.0;
  if (diag) *diag = {one_minus_ratio, clamped, log_path, near_boundary};
  return clamped ? 0.0 : std::sqrt(std::min(one_minus_ratio, 1.0));
}

template <typename Point>
double delta_impl(const KernelId& id, const Point& x, const Point& w, DeltaDiagnostics* diag) {
  const bool near = x.near_boundary() || w.near_boundary();
  if (x == w) return finish(0.0, false, near, diag);
  if (within_log_band(x) || within_log_band(w)) {
    const double log_ratio =
        2.0 * log_abs_kernel(id, x, w) - log_kernel_diagonal(id, x) - log_kernel_diagonal(id, w);
    return finish(-std::expm1(log_ratio), true, near, diag);
  }
  const Complex kxw = kernel_eval(id, x, w);
  const double kxx = kernel_eval(id, x, x).real();
  const double kww = kernel_eval(id, w, w).real();
  return finish(1.0 - (std::abs(kxw) / kxx) * (std::abs(kxw) / kww), false, near, diag);
}

}  // namespace

double delta(const KernelId& id, const DiskPoint& x, const DiskPoint& w, DeltaDiagnostics* diag) {
  return delta_impl(id, x, w, diag);
}

double delta(const KernelId& id, const BallPoint& x, const BallPoint& w, DeltaDiagnostics* diag) {
  require_same_dim(x, w);
  return delta_impl(id, x, w, diag);
}

double rho(const DiskPoint& z, const DiskPoint& w) {
  if (z == w) return 0.0;
  const auto p = conj_product(z, w);
  return std::min(1.0, std::abs(z.value() - w.value()) / std::abs(p.one_minus_u));
}

double rho(const BallPoint& z, const BallPoint& w) {
  require_same_dim(z, w);
  // Extended precision: for pairs close to the sphere the two sums below agree
  // in their leading digits.
  using Wide = std::complex<long double>;
  const std::size_t n = z.dim();
  long double diff_sq = 0.0L;
  Wide zw = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    diff_sq += std::norm(Wide(z[i]) - Wide(w[i]));
    zw += Wide(z[i]) * std::conj(Wide(w[i]));
  }
  long double lagrange = 0.0L;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      lagrange += std::norm(Wide(z[i]) * Wide(w[j]) - Wide(z[j]) * Wide(w[i]));
  const long double num = std::max(0.0L, diff_sq - lagrange);
  return std::min(1.0, static_cast<double>(std::sqrt(num) / std::abs(1.0L - zw)));
}

bool delta_rescale_check(const KernelId& id, double scale_x, double scale_w,
                         const DiskPoint& x, const DiskPoint& w) {
  if (!(scale_x > 0.0) || !(scale_w > 0.0)) throw DomainError("rescaling factors must be positive");
  using Ext = long double;
  const Complex kxw = kernel_eval(id, x, w);
  const Ext sx = scale_x;
  const Ext sw = scale_w;
  const Ext abs_kxw = sx * sw * static_cast<Ext>(std::abs(kxw));
  const Ext kxx = sx * sx * static_cast<Ext>(kernel_eval(id, x, x).real());
  const Ext kww = sw * sw * static_cast<Ext>(kernel_eval(id, w, w).real());
  const Ext one_minus = 1.0L - (abs_kxw / kxx) * (abs_kxw / kww);
  const double rescaled = one_minus <= 0.0L ? 0.0 : static_cast<double>(std::sqrt(one_minus));
  return std::abs(rescaled - delta(id, x, w)) <= 1e-13;
}

}  // namespace rkm

#include "rkm/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace rkm {

namespace {

void check_step(const KernelId& id, const DiskPoint& z, double step, double margin_factor) {
  if (!id.on_disk()) throw InvalidInput("curvature sampling needs a kernel on the disk");
  if (!(step >= kMinCurvatureStep && step <= kMaxCurvatureStep))
    throw DomainError("curvature step must lie in [1e-6, 1e-2]");
  if (1.0 - z.modulus() < margin_factor * step)
    throw DomainError("point " + to_string(z) + " is too close to the boundary for step " +
                      std::to_string(step));
}

double log_diag(const KernelId& id, double x, double y) {
  return log_kernel_diagonal(id, DiskPoint(x, y));
}

double density_unchecked(const KernelId& id, double x, double y, double h) {
  const double centre = log_diag(id, x, y);
  const double sum = log_diag(id, x + h, y) + log_diag(id, x - h, y) + log_diag(id, x, y + h) +
                     log_diag(id, x, y - h);
  return (sum - 4.0 * centre) / (h * h);
}

// log alpha = log(alpha^2) / 2
double log_alpha(const KernelId& id, double x, double y, double h) {
  const double d = density_unchecked(id, x, y, h);
  if (!(d > 0.0)) throw DomainError("non-positive metric density");
  return 0.5 * std::log(d);
}

double curvature_unchecked(const KernelId& id, double x, double y, double h, double* density) {
  const double d = density_unchecked(id, x, y, h);
  if (!(d > 0.0)) throw DomainError("non-positive metric density");
  if (density) *density = d;
  const double centre = 0.5 * std::log(d);
  const double sum = log_alpha(id, x + h, y, h) + log_alpha(id, x - h, y, h) +
                     log_alpha(id, x, y + h, h) + log_alpha(id, x, y - h, h);
  return -((sum - 4.0 * centre) / (h * h)) / d;
}

}  // namespace

double metric_density(const KernelId& id, const DiskPoint& z, double step) {
  check_step(id, z, step, 4.0);
  return density_unchecked(id, z.value().real(), z.value().imag(), step);
}

double curvature_at_step(const KernelId& id, const DiskPoint& z, double step) {
  check_step(id, z, step, 4.0);
  return curvature_unchecked(id, z.value().real(), z.value().imag(), step, nullptr);
}

CurvatureSample gaussian_curvature(const KernelId& id, const DiskPoint& z, double step) {
  check_step(id, z, step, 8.0);
  CurvatureSample s;
  s.z = z;
  s.step = step;
  s.kernel_tag = id.tag();
  const double x = z.value().real();
  const double y = z.value().imag();
  try {
    double d_coarse = 0.0, d_fine = 0.0;
    const double k_coarse = curvature_unchecked(id, x, y, step, &d_coarse);
    const double k_fine = curvature_unchecked(id, x, y, 0.5 * step, &d_fine);
    s.alpha_sq = (4.0 * d_fine - d_coarse) / 3.0;
    s.kappa = (4.0 * k_fine - k_coarse) / 3.0;
    s.est_error = std::abs(k_fine - k_coarse) / 3.0;
    s.valid = std::isfinite(s.kappa) && s.alpha_sq > 0.0;
  } catch (const DomainError&) {
    s.valid = false;
  }
  return s;
}

std::vector<CurvatureSample> sample_curvature(const KernelId& id, std::span<const DiskPoint> points,
                                              double step, int parallelism) {
  std::vector<CurvatureSample> out(points.size());
  const int workers = std::clamp<int>(parallelism, 1, std::max<int>(1, static_cast<int>(points.size())));
  auto job = [&](int w) {
    for (std::size_t i = w; i < points.size(); i += workers) {
      try {
        out[i] = gaussian_curvature(id, points[i], step);
      } catch (const DomainError&) {
        out[i].z = points[i];
        out[i].step = step;
        out[i].kernel_tag = id.tag();
        out[i].valid = false;
      }
    }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

}  // namespace rkm

#include "rkm/packing.hpp"

#include <cmath>
#include <numbers>

#include "rkm/asymptotics.hpp"
#include "rkm/ball_geometry.hpp"
#include "rkm/kernels.hpp"
#include "rkm/metrics.hpp"

namespace rkm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kExhaustiveLimit = 1e6;

void require_regime(double K) {
  if (!(K >= 5.0) || !std::isfinite(K)) throw DomainError("ring construction needs K >= 5");
}

}  // namespace

double ring_point_count(double K) {
  require_regime(K);
  return std::floor(kTwoPi / boundary_scale(K).sigma);
}

std::vector<DiskPoint> ring_points(double K, std::size_t count_cap) {
  const auto s = boundary_scale(K);
  const double N = ring_point_count(K);
  const auto count = static_cast<std::size_t>(std::min(N, static_cast<double>(count_cap)));
  std::vector<DiskPoint> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(s.point(kTwoPi * static_cast<double>(j) / N));
  return out;
}

std::vector<DiskPoint> ring_configuration(double K, std::size_t count) {
  const auto s = boundary_scale(K);
  std::vector<DiskPoint> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j)
    out.push_back(s.point(kTwoPi * static_cast<double>(j) / static_cast<double>(count)));
  return out;
}

double ring_separation(double K, double index_gap) {
  const auto s = boundary_scale(K);
  const double N = ring_point_count(K);
  return delta(KernelId::dirichlet(), s.point(), s.point(kTwoPi * index_gap / N));
}

double PackingCertificate::small_volume() const { return std::exp(log_small_volume); }
double PackingCertificate::large_volume() const { return std::exp(log_large_volume); }

PackingCertificate certificate(int n, double K, SeparationMode mode) {
  if (n < 1) throw DomainError("ambient dimension must be >= 1");
  require_regime(K);
  const auto s = boundary_scale(K);
  PackingCertificate c;
  c.n = n;
  c.K = K;
  c.sigma = s.sigma;
  c.point_count = ring_point_count(K);
  c.log_point_count = std::log(c.point_count);
  c.center_distance = delta(KernelId::dirichlet(), DiskPoint(), s.point());
  c.leading_order_center_distance = center_distance_dirichlet(K);
  c.separation_mode = mode;

  c.min_separation = ring_separation(K, 1.0);
  if (mode == SeparationMode::Exhaustive) {
    if (c.point_count > kExhaustiveLimit)
      throw DomainError("exhaustive separation scan refused for N > 1e6");
    const auto half = static_cast<long>(c.point_count) / 2;
    for (long j = 2; j <= half; ++j) c.min_separation = std::min(c.min_separation, ring_separation(K, j));
  }
  c.small_radius = 0.5 * c.min_separation * (1.0 - 1e-9);
  c.enclosing_radius = strengthened_triangle_bound(c.center_distance, c.small_radius);
  c.leading_order_enclosing_radius = 1.0 - 1.0 / (3.0 * K);
  c.enclosure_within_leading_order_radius = c.enclosing_radius <= c.leading_order_enclosing_radius;

  c.log_small_volume = log_pseudo_ball_volume(c.small_radius, n);
  c.log_large_volume = log_pseudo_ball_volume(c.enclosing_radius, n);
  c.log_packing_ratio = c.log_point_count + c.log_small_volume - c.log_large_volume;
  c.feasible = c.log_packing_ratio <= 0.0;
  return c;
}

ThresholdSweep threshold_sweep(int n, double K_max, bool keep_certificates) {
  if (n < 1) throw DomainError("ambient dimension must be >= 1");
  if (!(K_max >= kThresholdGridStart)) throw DomainError("K_max must be at least the grid start K = 5");
  ThresholdSweep sweep;
  sweep.n = n;
  sweep.K_max = K_max;
  for (int step = 0;; ++step) {
    const double K = kThresholdGridStart + kThresholdGridStep * step;
    if (K > K_max) break;
    auto c = certificate(n, K);
    if (!c.feasible && !sweep.threshold) sweep.threshold = K;
    if (c.feasible && sweep.threshold) sweep.monotone = false;
    if (keep_certificates) sweep.certificates.push_back(std::move(c));
  }
  return sweep;
}

std::optional<double> obstruction_threshold(int n, double K_max) {
  auto sweep = threshold_sweep(n, K_max);
  if (!sweep.monotone) throw DomainError("packing verdict is not monotone in K past the threshold");
  return sweep.threshold;
}

std::string to_string(SeparationMode mode) {
  return mode == SeparationMode::Adjacent ? "adjacent" : "exhaustive";
}

}  // namespace rkm

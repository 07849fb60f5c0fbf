#pragma once

#include <string>
#include <string_view>

#include "rkm/points.hpp"

namespace rkm {

enum class KernelFamily { Dirichlet, DruryArveson, DirichletAlpha, LogPower };

/// Selects one reproducing kernel together with its parameters.
///
///   Dirichlet         h(z, w) = log(1 / (1 - conj(z) w)) / (conj(z) w), 1 at conj(z) w = 0
///   DruryArveson n    j(z, w) = 1 / (1 - <w, z>) on the ball of C^n
///   DirichletAlpha a  (1 - conj(z) w)^(-a), 0 < a <= 1
///   LogPower m        h(z, w)^m
struct KernelId {
  KernelFamily family = KernelFamily::Dirichlet;
  int dimension = 1;
  double alpha = 1.0;
  int power = 1;

  static KernelId dirichlet() { return {}; }
  static KernelId drury_arveson(int n);
  static KernelId dirichlet_alpha(double alpha);
  static KernelId log_power(int m);

  /// True when the kernel lives on the disk (every family except DruryArveson n > 1).
  bool on_disk() const;

  /// Stable text tag: "dirichlet", "da:3", "alpha:0.5", "logpow:2".
  std::string tag() const;
  static KernelId parse(std::string_view tag);

  friend bool operator==(const KernelId&, const KernelId&) = default;
};

/// Removable-singularity threshold for log(1/(1-u))/u.
inline constexpr double kDirichletSeriesRadius = 1e-3;

namespace detail {
/// log(1/(1-u))/u by its Taylor series through u^20.
Complex dirichlet_profile_series(Complex u);
/// log(1/(1-u))/u in closed form; one_minus_u must be 1 - u computed accurately.
Complex dirichlet_profile_closed(Complex u, Complex one_minus_u);
/// log(1 + x) for complex x, accurate when |x| is small.
Complex log1p(Complex x);
}  // namespace detail

/// log(1/(1-u))/u with the series/closed-form switch at kDirichletSeriesRadius.
Complex dirichlet_profile(Complex u, Complex one_minus_u);

Complex dirichlet_kernel(const DiskPoint& z, const DiskPoint& w);
Complex da_kernel(const BallPoint& z, const BallPoint& w);

/// Kernel value k(z, w). Disk families take DiskPoint; DruryArveson n = 1
/// accepts either point type.
Complex kernel_eval(const KernelId& id, const DiskPoint& z, const DiskPoint& w);
Complex kernel_eval(const KernelId& id, const BallPoint& z, const BallPoint& w);

/// log|k(z, w)|, finite for every pair of interior points.
double log_abs_kernel(const KernelId& id, const DiskPoint& z, const DiskPoint& w);
double log_abs_kernel(const KernelId& id, const BallPoint& z, const BallPoint& w);

/// log k(z, z) (the diagonal is real and >= 1 for all families).
double log_kernel_diagonal(const KernelId& id, const DiskPoint& z);
double log_kernel_diagonal(const KernelId& id, const BallPoint& z);

}  // namespace rkm

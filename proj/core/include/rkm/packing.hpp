#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rkm/points.hpp"

namespace rkm {

/// Number of equally spaced ring points floor(2 pi / sigma(K)). Integer valued
/// but held as a double: it exceeds 2^64 once K > 42.
double ring_point_count(double K);

/// min(N, count_cap) of the N equally spaced points (1 - sigma) e^{2 pi i j / N},
/// in index order. Requires K >= 5.
std::vector<DiskPoint> ring_points(double K, std::size_t count_cap);

/// `count` equally spaced points on the circle |z| = 1 - sigma(K), K > 1.
std::vector<DiskPoint> ring_configuration(double K, std::size_t count);

/// delta_D between ring points j apart, j in [1, N/2].
double ring_separation(double K, double index_gap);

enum class SeparationMode {
  Adjacent,    // delta_D of one adjacent pair
  Exhaustive,  // min over every index gap; refused when N > 1e6
};

/// The volume-counting argument at one (n, K), evaluated with exact formulas.
struct PackingCertificate {
  int n = 0;
  double K = 0.0;
  double sigma = 0.0;
  double point_count = 0.0;      // N = floor(2 pi / sigma)
  double log_point_count = 0.0;
  double center_distance = 0.0;  // delta_D(0, z), exact
  double leading_order_center_distance = 0.0;  // sqrt(1 - 1/K)
  double min_separation = 0.0;
  double small_radius = 0.0;     // min_separation / 2 * (1 - 1e-9)
  double enclosing_radius = 0.0; // strengthened bound on rho(0, zeta), zeta in a small ball
  double leading_order_enclosing_radius = 0.0;  // 1 - 1/(3K)
  bool enclosure_within_leading_order_radius = false;
  double log_small_volume = 0.0;
  double log_large_volume = 0.0;
  /// log(N V_S / V_L); the packing is feasible iff this is <= 0.
  double log_packing_ratio = 0.0;
  bool feasible = true;
  SeparationMode separation_mode = SeparationMode::Adjacent;

  double small_volume() const;
  double large_volume() const;
};

PackingCertificate certificate(int n, double K, SeparationMode mode = SeparationMode::Adjacent);

inline constexpr double kThresholdGridStep = 0.25;
inline constexpr double kThresholdGridStart = 5.0;

struct ThresholdSweep {
  int n = 0;
  double K_max = 0.0;
  std::optional<double> threshold;
  /// Every grid point past the threshold is infeasible as well.
  bool monotone = true;
  std::vector<PackingCertificate> certificates;
};

/// Grid K = 5, 5.25, ..., K_max; the smallest K with an infeasible packing.
ThresholdSweep threshold_sweep(int n, double K_max, bool keep_certificates = false);
std::optional<double> obstruction_threshold(int n, double K_max);

std::string to_string(SeparationMode mode);

}  // namespace rkm

#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rkm {

using Complex = std::complex<double>;

/// Raised for points outside the open ball, out-of-range parameters and
/// other violations of an operation's preconditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when arguments are individually valid but do not fit together
/// (dimension mismatch, kernel family applied to the wrong point type).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points with 1 - |z| below this are accepted but reported as boundary points.
inline constexpr double kBoundaryFlagDistance = 1e-12;

/// A point of the unit disk.
///
/// Besides the complex value the point carries its defect 1 - |z|^2 and its
/// polar angle. Points built with `from_defect` keep the defect exactly, which
/// lets kernels be evaluated at points whose modulus rounds to 1 in double
/// precision (e.g. 1 - |z|^2 = e^-160).
class DiskPoint {
 public:
  DiskPoint() = default;
  explicit DiskPoint(Complex z);
  DiskPoint(double re, double im) : DiskPoint(Complex(re, im)) {}

  /// Point with 1 - |z|^2 = defect and argument `angle`. Requires 0 < defect <= 1.
  static DiskPoint from_defect(double defect, double angle);

  Complex value() const { return z_; }
  double defect() const { return defect_; }
  double modulus() const { return radius_; }
  double angle() const { return angle_; }
  bool is_origin() const { return radius_ == 0.0; }
  bool near_boundary() const;

  /// Same point rotated by e^{i theta}; the defect is preserved exactly.
  DiskPoint rotated(double theta) const;

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) {
    return a.defect_ == b.defect_ && a.angle_ == b.angle_;
  }

 private:
  Complex z_{0.0, 0.0};
  double defect_ = 1.0;
  double radius_ = 0.0;
  double angle_ = 0.0;
};

/// u = conj(z) w together with 1 - u, the latter computed from the stored
/// defects so that it keeps full relative accuracy when |u| -> 1.
struct ConjProduct {
  Complex u;
  Complex one_minus_u;
};

ConjProduct conj_product(const DiskPoint& z, const DiskPoint& w);

/// A point of the unit ball of C^n.
class BallPoint {
 public:
  BallPoint() = default;
  explicit BallPoint(std::vector<Complex> coords);
  BallPoint(std::initializer_list<Complex> coords)
      : BallPoint(std::vector<Complex>(coords)) {}

  static BallPoint origin(std::size_t n) { return BallPoint(std::vector<Complex>(n)); }
  static BallPoint from_disk(const DiskPoint& p) { return BallPoint({p.value()}); }

  std::size_t dim() const { return coords_.size(); }
  std::span<const Complex> coords() const { return coords_; }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  double norm_sq() const { return norm_sq_; }
  double defect() const { return 1.0 - norm_sq_; }
  bool near_boundary() const;
  bool is_origin() const { return norm_sq_ == 0.0; }

  friend bool operator==(const BallPoint&, const BallPoint&) = default;

 private:
  std::vector<Complex> coords_;
  double norm_sq_ = 0.0;
};

/// <z, w> = sum z_i conj(w_i). Throws InvalidInput on dimension mismatch.
Complex inner(const BallPoint& z, const BallPoint& w);

void require_same_dim(const BallPoint& z, const BallPoint& w);

std::string to_string(const DiskPoint& p);
std::string to_string(const BallPoint& p);

}  // namespace rkm

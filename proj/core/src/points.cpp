#include "rkm/points.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace rkm {

DiskPoint::DiskPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("disk point is not finite");
  radius_ = std::abs(z);
  if (radius_ >= 1.0) throw DomainError("disk point " + to_string(*this) + " is not inside the unit disk");
  defect_ = (1.0 - radius_) * (1.0 + radius_);
  angle_ = radius_ == 0.0 ? 0.0 : std::arg(z);
}

DiskPoint DiskPoint::from_defect(double defect, double angle) {
  if (!(defect > 0.0) || !(defect <= 1.0) || !std::isfinite(angle))
    throw DomainError("defect 1-|z|^2 must lie in (0, 1]");
  DiskPoint p;
  p.defect_ = defect;
  p.radius_ = std::sqrt(1.0 - defect);
  p.angle_ = std::remainder(angle, 2.0 * std::numbers::pi);
  p.z_ = std::polar(p.radius_, p.angle_);
  if (p.radius_ == 0.0) p.angle_ = 0.0;
  return p;
}

bool DiskPoint::near_boundary() const {
  // 1 - |z| = d / (1 + |z|)
  return defect_ / (1.0 + radius_) < kBoundaryFlagDistance;
}

DiskPoint DiskPoint::rotated(double theta) const {
  if (is_origin()) return *this;
  return from_defect(defect_, angle_ + theta);
}

ConjProduct conj_product(const DiskPoint& z, const DiskPoint& w) {
  const double rr = z.modulus() * w.modulus();
  if (rr == 0.0) return {Complex(0.0, 0.0), Complex(1.0, 0.0)};
  const double dz = z.defect();
  const double dw = w.defect();
  // 1 - |z||w| = (1 - |z|^2 |w|^2) / (1 + |z||w|)
  const double one_minus_rr = (dz + dw - dz * dw) / (1.0 + rr);
  const double delta = w.angle() - z.angle();
  const double half_sin = std::sin(0.5 * delta);
  // 1 - e^{i delta} = 2 sin^2(delta/2) - i sin(delta)
  const Complex one_minus_rot(2.0 * half_sin * half_sin, -std::sin(delta));
  ConjProduct out;
  out.u = std::polar(rr, delta);
  out.one_minus_u = one_minus_rr + rr * one_minus_rot;
  return out;
}

BallPoint::BallPoint(std::vector<Complex> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DomainError("ball point must have dimension >= 1");
  for (const auto& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("ball point is not finite");
    norm_sq_ += std::norm(c);
  }
  if (norm_sq_ >= 1.0) throw DomainError("ball point " + to_string(*this) + " is not inside the unit ball");
}

bool BallPoint::near_boundary() const {
  return (1.0 - norm_sq_) / (1.0 + std::sqrt(norm_sq_)) < kBoundaryFlagDistance;
}

void require_same_dim(const BallPoint& z, const BallPoint& w) {
  if (z.dim() != w.dim())
    throw InvalidInput("dimension mismatch: " + std::to_string(z.dim()) + " vs " +
                       std::to_string(w.dim()));
}

Complex inner(const BallPoint& z, const BallPoint& w) {
  require_same_dim(z, w);
  Complex s{};
  for (std::size_t i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

std::string to_string(const DiskPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.value().real() << ',' << p.value().imag() << ')';
  return os.str();
}

std::string to_string(const BallPoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ", ";
    os << '(' << p[i].real() << ',' << p[i].imag() << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace rkm

#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library: values are computed with boost::multiprecision from
// the defining formulas, so they check the library's double-precision paths
// (series switch, boundary-defect form, log-magnitude form) from outside.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_100;

struct MpComplex {
  Real re, im;
};

inline MpComplex mul(const MpComplex& a, const MpComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline MpComplex div(const MpComplex& a, const MpComplex& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline MpComplex log(const MpComplex& a) {
  using boost::multiprecision::atan2;
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;
  return {log(sqrt(a.re * a.re + a.im * a.im)), atan2(a.im, a.re)};
}

inline Real abs_sq(const MpComplex& a) { return a.re * a.re + a.im * a.im; }

/// log(1/(1-u))/u from the first `terms` Taylor terms.
inline std::complex<double> dirichlet_series(std::complex<double> u, int terms = 30) {
  std::complex<double> acc = 0.0, pw = 1.0;
  for (int k = 0; k < terms; ++k) {
    acc += pw / static_cast<double>(k + 1);
    pw *= u;
  }
  return acc;
}

/// Dirichlet kernel at a pair of points given in polar form (r, theta) in 100-digit arithmetic.
inline MpComplex dirichlet_kernel(const Real& rz, const Real& tz, const Real& rw, const Real& tw) {
  using boost::multiprecision::cos;
  using boost::multiprecision::sin;
  const Real rr = rz * rw;
  const MpComplex u{rr * cos(tw - tz), rr * sin(tw - tz)};
  if (rr == 0) return {1, 0};
  const MpComplex one_minus{1 - u.re, -u.im};
  const MpComplex lg = log(one_minus);
  return div({-lg.re, -lg.im}, u);
}

/// delta_D between (r, tz) and (r, tw) where r^2 = 1 - e^{-K}, all in 100 digits.
inline double ring_delta_sq(double K, const Real& tz, const Real& tw) {
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  const Real r = sqrt(1 - exp(-Real(K)));
  const auto kzw = dirichlet_kernel(r, tz, r, tw);
  const auto kzz = dirichlet_kernel(r, tz, r, tz);
  const auto kww = dirichlet_kernel(r, tw, r, tw);
  return static_cast<double>(1 - abs_sq(kzw) / (kzz.re * kww.re));
}

/// sigma(K) = 1 - sqrt(1 - e^{-K}) in 100 digits, rationalised so that it
/// keeps its relative accuracy once e^{-K} drops below 1e-100.
inline Real sigma(double K) {
  using boost::multiprecision::exp;
  using boost::multiprecision::sqrt;
  const Real e = exp(-Real(K));
  return e / (1 + sqrt(1 - e));
}

/// Metric density and curvature of the Dirichlet kernel at |z|^2 = t, from the
/// radial form of the Laplacian, Laplacian f(|z|^2) = 4 (f'(t) + t f''(t)).
/// The density uses closed-form derivatives of log(-log(1-t)/t); the curvature
/// differentiates log(density) numerically in 100-digit arithmetic.
struct RadialCurvature {
  double alpha_sq;
  double kappa;
};

inline Real dirichlet_density(const Real& t) {
  using boost::multiprecision::log;
  const Real L = -log(1 - t);
  const Real dL = 1 / (1 - t);
  const Real ddL = dL * dL;
  const Real f1 = dL / L - 1 / t;
  const Real f2 = ddL / L - (dL / L) * (dL / L) + 1 / (t * t);
  return 4 * (f1 + t * f2);
}

inline RadialCurvature dirichlet_curvature(double t_in) {
  using boost::multiprecision::log;
  const Real t(t_in);
  const Real h("1e-25");
  const Real g0 = dirichlet_density(t);
  const Real gp = log(dirichlet_density(t + h));
  const Real gm = log(dirichlet_density(t - h));
  const Real G1 = (gp - gm) / (2 * h);
  const Real G2 = (gp - 2 * log(g0) + gm) / (h * h);
  // Laplacian(log alpha) = Laplacian(log alpha^2) / 2
  const Real lap = 2 * (G1 + t * G2);
  return {static_cast<double>(g0), static_cast<double>(-lap / g0)};
}

/// c_n integral over the Euclidean r-ball by adaptive quadrature of the radial profile
/// 2n t^{2n-1} (1 - t^2)^{-(n+1)}.
inline double radial_volume(double r, int n) {
  auto f = [n](double t) { return 2.0 * n * std::pow(t, 2 * n - 1) * std::pow(1.0 - t * t, -(n + 1)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, r, 15, 1e-14);
}

/// Uniform sample of the open unit disk with |z| <= rmax.
inline std::complex<double> random_disk(std::mt19937_64& rng, double rmax = 0.999) {
  std::uniform_real_distribution<double> u;
  return std::polar(rmax * std::sqrt(u(rng)), 6.283185307179586 * u(rng));
}

/// Uniform sample of the ball of C^n with norm <= rmax.
inline std::vector<std::complex<double>> random_ball(std::mt19937_64& rng, int n, double rmax = 0.999) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u;
  std::vector<std::complex<double>> v(n);
  double len = 0.0;
  for (auto& c : v) {
    c = {g(rng), g(rng)};
    len += std::norm(c);
  }
  const double radius = rmax * std::pow(u(rng), 1.0 / (2 * n));
  for (auto& c : v) c *= radius / std::sqrt(len);
  return v;
}

}  // namespace oracle

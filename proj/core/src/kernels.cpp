#include "rkm/kernels.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace rkm {

KernelId KernelId::drury_arveson(int n) {
  if (n < 1) throw DomainError("Drury-Arveson dimension must be >= 1");
  return {KernelFamily::DruryArveson, n, 1.0, 1};
}

KernelId KernelId::dirichlet_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("D_alpha exponent must lie in (0, 1]");
  return {KernelFamily::DirichletAlpha, 1, alpha, 1};
}

KernelId KernelId::log_power(int m) {
  if (m < 1) throw DomainError("log-power exponent must be >= 1");
  return {KernelFamily::LogPower, 1, 1.0, m};
}

bool KernelId::on_disk() const {
  return family != KernelFamily::DruryArveson || dimension == 1;
}

std::string KernelId::tag() const {
  switch (family) {
    case KernelFamily::Dirichlet: return "dirichlet";
    case KernelFamily::DruryArveson: return "da:" + std::to_string(dimension);
    case KernelFamily::DirichletAlpha: {
      std::ostringstream os;
      os.precision(17);
      os << "alpha:" << alpha;
      return os.str();
    }
    case KernelFamily::LogPower: return "logpow:" + std::to_string(power);
  }
  return "?";
}

namespace {

template <typename T>
T parse_number(std::string_view text, std::string_view tag) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("bad kernel parameter in '" + std::string(tag) + "'");
  return value;
}

}  // namespace

KernelId KernelId::parse(std::string_view tag) {
  const auto colon = tag.find(':');
  const auto head = tag.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : tag.substr(colon + 1);
  if (head == "dirichlet" && arg.empty()) return dirichlet();
  if (head == "da") return drury_arveson(arg.empty() ? 1 : parse_number<int>(arg, tag));
  if (head == "alpha") return dirichlet_alpha(parse_number<double>(arg, tag));
  if (head == "logpow") return log_power(parse_number<int>(arg, tag));
  throw InvalidInput("unknown kernel '" + std::string(tag) + "'");
}

namespace detail {

Complex dirichlet_profile_series(Complex u) {
  // sum_{k=0}^{20} u^k / (k + 1), Horner form
  Complex acc(1.0 / 21.0, 0.0);
  for (int k = 19; k >= 0; --k) acc = acc * u + 1.0 / (k + 1.0);
  return acc;
}

Complex log1p(Complex x) {
  const double re = x.real();
  const double im = x.imag();
  // |1 + x|^2 - 1 = 2 Re x + |x|^2
  return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

Complex dirichlet_profile_closed(Complex u, Complex one_minus_u) {
  // principal branch: Re(1 - u) > 0 on the disk
  const Complex log_one_minus_u = std::abs(u) < 0.5 ? log1p(-u) : std::log(one_minus_u);
  return -log_one_minus_u / u;
}

}  // namespace detail

Complex dirichlet_profile(Complex u, Complex one_minus_u) {
  if (std::abs(u) < kDirichletSeriesRadius) return detail::dirichlet_profile_series(u);
  return detail::dirichlet_profile_closed(u, one_minus_u);
}

Complex dirichlet_kernel(const DiskPoint& z, const DiskPoint& w) {
  const auto p = conj_product(z, w);
  return dirichlet_profile(p.u, p.one_minus_u);
}

namespace {

Complex one_minus_inner(const BallPoint& w, const BallPoint& z) { return 1.0 - inner(w, z); }

void require_disk_family(const KernelId& id) {
  if (!id.on_disk())
    throw InvalidInput("kernel " + id.tag() + " is defined on the ball, not the disk");
}

Complex int_power(Complex base, int m) {
  Complex out = base;
  for (int i = 1; i < m; ++i) out *= base;
  return out;
}

// log(1 - |z|^2), using log1p away from the boundary
double log_defect(double r2, double defect) {
  return r2 < 0.5 ? std::log1p(-r2) : std::log(defect);
}

double log_abs_profile(const ConjProduct& p) {
  return std::log(std::abs(dirichlet_profile(p.u, p.one_minus_u)));
}

}  // namespace

Complex da_kernel(const BallPoint& z, const BallPoint& w) {
  return 1.0 / one_minus_inner(w, z);
}

Complex kernel_eval(const KernelId& id, const DiskPoint& z, const DiskPoint& w) {
  require_disk_family(id);
  switch (id.family) {
    case KernelFamily::Dirichlet: return dirichlet_kernel(z, w);
    case KernelFamily::LogPower:
      if (id.power == 1) return dirichlet_kernel(z, w);
      return int_power(dirichlet_kernel(z, w), id.power);
    case KernelFamily::DruryArveson: return 1.0 / conj_product(z, w).one_minus_u;
    case KernelFamily::DirichletAlpha: {
      const auto p = conj_product(z, w);
      if (id.alpha == 1.0) return 1.0 / p.one_minus_u;
      return std::exp(-id.alpha * std::log(p.one_minus_u));
    }
  }
  throw InvalidInput("unknown kernel family");
}

Complex kernel_eval(const KernelId& id, const BallPoint& z, const BallPoint& w) {
  if (id.family == KernelFamily::DruryArveson) {
    if (z.dim() != static_cast<std::size_t>(id.dimension))
      throw InvalidInput("point dimension " + std::to_string(z.dim()) + " does not match " + id.tag());
    return da_kernel(z, w);
  }
  throw InvalidInput("kernel " + id.tag() + " takes disk points");
}

double log_abs_kernel(const KernelId& id, const DiskPoint& z, const DiskPoint& w) {
  require_disk_family(id);
  const auto p = conj_product(z, w);
  switch (id.family) {
    case KernelFamily::Dirichlet: return log_abs_profile(p);
    case KernelFamily::LogPower: return id.power * log_abs_profile(p);
    case KernelFamily::DruryArveson: return -std::log(std::abs(p.one_minus_u));
    case KernelFamily::DirichletAlpha: return -id.alpha * std::log(std::abs(p.one_minus_u));
  }
  throw InvalidInput("unknown kernel family");
}

double log_abs_kernel(const KernelId& id, const BallPoint& z, const BallPoint& w) {
  if (id.family != KernelFamily::DruryArveson) throw InvalidInput("kernel " + id.tag() + " takes disk points");
  if (z.dim() != static_cast<std::size_t>(id.dimension))
    throw InvalidInput("point dimension does not match " + id.tag());
  return -std::log(std::abs(one_minus_inner(w, z)));
}

double log_kernel_diagonal(const KernelId& id, const DiskPoint& z) {
  require_disk_family(id);
  const double d = z.defect();
  const double r2 = z.modulus() * z.modulus();
  switch (id.family) {
    case KernelFamily::Dirichlet:
    case KernelFamily::LogPower: {
      // k(z, z) = -log(d) / (1 - d)
      const double profile = r2 < kDirichletSeriesRadius
                                 ? detail::dirichlet_profile_series(Complex(r2, 0.0)).real()
                                 : -log_defect(r2, d) / r2;
      return id.power * std::log(profile);
    }
    case KernelFamily::DruryArveson: return -log_defect(r2, d);
    case KernelFamily::DirichletAlpha: return -id.alpha * log_defect(r2, d);
  }
  throw InvalidInput("unknown kernel family");
}

double log_kernel_diagonal(const KernelId& id, const BallPoint& z) {
  if (id.family != KernelFamily::DruryArveson) throw InvalidInput("kernel " + id.tag() + " takes disk points");
  if (z.dim() != static_cast<std::size_t>(id.dimension))
    throw InvalidInput("point dimension does not match " + id.tag());
  return -log_defect(z.norm_sq(), z.defect());
}

}  // namespace rkm

#include "rkm/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rkm/asymptotics.hpp"
#include "rkm/ball_geometry.hpp"
#include "rkm/curvature.hpp"
#include "rkm/embedder.hpp"
#include "rkm/kernels.hpp"
#include "rkm/metrics.hpp"
#include "rkm/packing.hpp"

namespace rkm {

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  DiskPoint disk() {
    std::uniform_real_distribution<double> u;
    const double r = 0.999 * std::sqrt(u(rng_));
    return DiskPoint(std::polar(r, 2.0 * std::numbers::pi * u(rng_)));
  }

  BallPoint ball(int n) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    std::vector<Complex> c(n);
    double len = 0.0;
    for (auto& v : c) {
      v = Complex(g(rng_), g(rng_));
      len += std::norm(v);
    }
    const double r = 0.999 * std::pow(u(rng_), 1.0 / (2 * n));
    for (auto& v : c) v *= r / std::sqrt(len);
    return BallPoint(std::move(c));
  }

 private:
  std::mt19937_64 rng_;
};

std::string fmt(const char* label, double v) {
  std::ostringstream os;
  os.precision(3);
  os << label << '=' << std::scientific << v;
  return os.str();
}

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt,
                                          const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  auto record = [&](CheckResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  const int samples = std::max(100, opt.samples);

  {
    Sampler s(opt.seed);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const auto z = s.disk();
      const auto w = s.disk();
      worst = std::max(worst, std::abs(delta(KernelId::drury_arveson(1), z, w) - rho(z, w)));
    }
    record(check("fundamental identity delta_DA1 = rho_1", worst < 1e-12, fmt("max_err", worst)));
  }
  {
    Sampler s(opt.seed + 1);
    double worst = 0.0;
    for (int n : {1, 2, 3, 8})
      for (int i = 0; i < samples / 4; ++i) {
        const auto z = s.ball(n);
        const auto w = s.ball(n);
        worst = std::max(worst, std::abs(delta(KernelId::drury_arveson(n), z, w) - rho(z, w)));
      }
    record(check("generic delta vs closed-form rho_n", worst < 1e-12, fmt("max_err", worst)));
  }
  {
    Sampler s(opt.seed + 2);
    double tri = 0.0, sym = 0.0;
    const KernelId disk_ids[] = {KernelId::dirichlet(), KernelId::log_power(2), KernelId::dirichlet_alpha(0.5)};
    for (const auto& id : disk_ids)
      for (int i = 0; i < samples / 3; ++i) {
        const auto x = s.disk();
        const auto y = s.disk();
        const auto z = s.disk();
        const double xy = delta(id, x, y), yz = delta(id, y, z), xz = delta(id, x, z);
        tri = std::max(tri, xz - xy - yz);
        sym = std::max(sym, std::abs(xy - delta(id, y, x)));
      }
    for (int i = 0; i < samples / 3; ++i) {
      const auto id = KernelId::drury_arveson(3);
      const auto x = s.ball(3);
      const auto y = s.ball(3);
      const auto z = s.ball(3);
      const double xy = delta(id, x, y), yz = delta(id, y, z), xz = delta(id, x, z);
      tri = std::max(tri, xz - xy - yz);
      sym = std::max(sym, std::abs(xy - delta(id, y, x)));
    }
    record(check("metric axioms (triangle, symmetry)", tri <= 1e-12 && sym <= 1e-14,
                 fmt("triangle_violation", tri) + " " + fmt("asymmetry", sym)));
  }
  {
    Sampler s(opt.seed + 3);
    double inv = 0.0, invol = 0.0, stb = 0.0;
    for (int n : {1, 2, 3, 5})
      for (int i = 0; i < samples / 8; ++i) {
        const auto a = s.ball(n);
        const auto z = s.ball(n);
        const auto w = s.ball(n);
        inv = std::max(inv, std::abs(rho(ball_automorphism(a, z), ball_automorphism(a, w)) - rho(z, w)));
        const auto back = ball_automorphism(a, ball_automorphism(a, z));
        for (std::size_t k = 0; k < z.dim(); ++k) invol = std::max(invol, std::abs(back[k] - z[k]));
        const double xy = rho(a, z), yz = rho(z, w);
        stb = std::max(stb, rho(a, w) - strengthened_triangle_bound(xy, yz));
      }
    record(check("automorphism invariance and involution", inv < 1e-10 && invol < 1e-12,
                 fmt("invariance_err", inv) + " " + fmt("involution_err", invol)));
    record(check("strengthened triangle inequality", stb <= 1e-12, fmt("violation", stb)));
  }
  {
    double worst = 0.0;
    for (int K = 2; K <= 50; ++K) {
      const double exact = std::sqrt(1.0 - (-std::expm1(-K)) / K);
      worst = std::max(worst, std::abs(center_distance_dirichlet_exact(K) - exact));
    }
    record(check("center distance 1 - delta^2 = z^2/K", worst < 1e-12, fmt("max_err", worst)));
  }
  {
    const double target = std::log(1.25);
    double prev = INFINITY;
    bool decreasing = true;
    double last = 0.0;
    for (double K : {20.0, 40.0, 80.0, 160.0}) {
      const auto est = rotation_displacement(K);
      last = std::abs(K * est.delta_sq - target);
      decreasing = decreasing && last < prev;
      prev = last;
    }
    record(check("rotation displacement K delta^2 -> ln(5/4)", decreasing && last < 0.02, fmt("final_err", last)));
  }
  {
    bool ok = true;
    std::ostringstream detail;
    for (int n : {1, 2, 3}) {
      const auto mc = mc_invariant_volume(0.6, n, 20 * static_cast<std::uint64_t>(samples), opt.seed + n,
                                          opt.parallelism);
      const double exact = pseudo_ball_volume(0.6, n);
      ok = ok && std::abs(mc.estimate - exact) <= 3.0 * mc.std_error;
      detail << "n=" << n << ":" << (mc.estimate - exact) / mc.std_error << "se ";
    }
    record(check("Monte Carlo invariant volume", ok, detail.str()));
  }
  {
    bool ok = true;
    double prev = 0.0;
    std::ostringstream detail;
    for (int n = 1; n <= 8; ++n) {
      const auto t = obstruction_threshold(n, 200.0);
      ok = ok && t.has_value() && *t >= prev;
      if (t) prev = *t;
      detail << (t ? *t : -1.0) << ' ';
    }
    ok = ok && !certificate(1, 10.0).feasible;
    record(check("packing obstruction thresholds n=1..8", ok, detail.str()));
  }
  {
    const std::vector<DiskPoint> pts = {DiskPoint(0.1, 0.2), DiskPoint(-0.4, 0.3)};
    EmbeddingSettings es;
    es.restarts = 2;
    es.seed = opt.seed;
    const auto problem = build_problem(pts, 2, es);
    const auto result = solve(problem);
    const auto params = to_parameters(std::vector<BallPoint>{BallPoint({Complex(0.1, 0.2), Complex(0.0, -0.3)}),
                                                             BallPoint({Complex(0.5, 0.1), Complex(0.2, 0.2)})});
    const double gerr = gradient_check(problem, params, 1e-5);
    record(check("embedder two-point stress and gradient", result.stress < 1e-10 && gerr < 1e-5,
                 fmt("stress", result.stress) + " " + fmt("grad_rel_err", gerr)));
  }
  {
    double worst = 0.0;
    for (double r : {0.0, 0.2, 0.4, 0.6})
      for (double th : {0.0, 1.0, 2.5}) {
        const auto s = gaussian_curvature(KernelId::drury_arveson(1), DiskPoint(std::polar(r, th)), 1e-2);
        worst = std::max(worst, std::abs(s.kappa + 1.0));
      }
    record(check("Hardy space curvature anchor kappa = -1", worst < 1e-5, fmt("max_err", worst)));
  }
  {
    double worst = 0.0;
    for (int K = 2; K <= 30; ++K) worst = std::max(worst, std::abs(logpower_center_distance(K, 1) -
                                                                  center_distance_dirichlet_exact(K)));
    const auto s = boundary_scale(20.0);
    double lim = 0.0;
    for (int m : {2, 3}) {
      const double d = logpower_center_distance(20.0, m);
      lim = std::max(lim, std::abs(std::pow(20.0, m) * (1.0 - d * d) * std::pow(s.z, -2 * m) - 1.0));
    }
    record(check("log-power kernels", worst < 1e-12 && lim < 0.01,
                 fmt("m1_err", worst) + " " + fmt("limit_err", lim)));
  }
  return results;
}

}  // namespace rkm

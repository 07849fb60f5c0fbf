#include "rkm/embedder.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

#include "rkm/kernels.hpp"
#include "rkm/metrics.hpp"

namespace rkm {

namespace {

void check_settings(const EmbeddingSettings& s, int n) {
  if (n < 1) throw DomainError("target dimension must be >= 1");
  if (s.restarts < 1 || s.max_iters < 1 || !(s.tolerance > 0.0))
    throw DomainError("restarts, max_iters and tolerance must be positive");
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

EmbeddingProblem build_problem(std::span<const DiskPoint> points, int n, EmbeddingSettings settings) {
  if (points.size() < 2) throw DomainError("an embedding problem needs at least two points");
  check_settings(settings, n);
  const std::size_t m = points.size();
  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i] == points[j]) throw DomainError("duplicate source point " + to_string(points[i]));
      d[i * m + j] = d[j * m + i] = delta(KernelId::dirichlet(), points[i], points[j]);
    }
  auto problem = build_problem_from_distances(std::move(d), m, n, settings);
  problem.source_points.assign(points.begin(), points.end());
  return problem;
}

EmbeddingProblem build_problem_from_distances(std::vector<double> distances, std::size_t size, int n,
                                              EmbeddingSettings settings) {
  if (size < 2) throw DomainError("an embedding problem needs at least two points");
  if (distances.size() != size * size) throw InvalidInput("distance matrix has the wrong size");
  check_settings(settings, n);
  for (std::size_t i = 0; i < size; ++i) {
    if (distances[i * size + i] != 0.0) throw DomainError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < size; ++j) {
      const double dij = distances[i * size + j];
      if (dij != distances[j * size + i]) throw DomainError("distance matrix must be symmetric");
      if (!(dij > 0.0 && dij < 1.0))
        throw DomainError("off-diagonal distances must lie in (0, 1); duplicate points are not allowed");
    }
  }
  EmbeddingProblem p;
  p.target_dim = n;
  p.size = size;
  p.distances = std::move(distances);
  p.settings = settings;
  return p;
}

std::vector<double> to_parameters(std::span<const BallPoint> points) {
  std::vector<double> y;
  for (const auto& p : points) {
    const double t = 1.0 / std::sqrt(p.defect());  // sqrt(1 + |y|^2)
    for (const auto& c : p.coords()) {
      y.push_back(c.real() * t);
      y.push_back(c.imag() * t);
    }
  }
  return y;
}

std::vector<BallPoint> to_points(std::span<const double> params, int n) {
  const std::size_t block = 2 * static_cast<std::size_t>(n);
  std::vector<BallPoint> out;
  for (std::size_t off = 0; off + block <= params.size(); off += block) {
    const auto y = params.subspan(off, block);
    const double t = std::sqrt(1.0 + dot(y, y));
    std::vector<Complex> coords(n);
    double norm_sq = 0.0;
    for (int k = 0; k < n; ++k) {
      coords[k] = Complex(y[2 * k], y[2 * k + 1]) / t;
      norm_sq += std::norm(coords[k]);
    }
    // |y| beyond ~1e8 rounds onto the sphere
    if (norm_sq >= 1.0)
      for (auto& c : coords) c *= std::nextafter(1.0, 0.0) / std::sqrt(norm_sq);
    out.emplace_back(std::move(coords));
  }
  return out;
}

double stress(const EmbeddingProblem& problem, std::span<const BallPoint> points) {
  double s = 0.0;
  for (std::size_t i = 0; i < problem.size; ++i)
    for (std::size_t j = i + 1; j < problem.size; ++j) {
      const double e = rho(points[i], points[j]) - problem.distance(i, j);
      s += e * e;
    }
  return s;
}

double stress_and_gradient(const EmbeddingProblem& problem, std::span<const double> params,
                           std::span<double> grad) {
  const int n = problem.target_dim;
  const std::size_t m = problem.size;
  const std::size_t block = 2 * static_cast<std::size_t>(n);
  if (params.size() != m * block || grad.size() != params.size())
    throw InvalidInput("parameter vector has the wrong length");

  // z_i and a_i = 1 - |z_i|^2 = 1 / (1 + |y_i|^2)
  std::vector<Complex> z(m * n);
  std::vector<double> a(m), t(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto y = params.subspan(i * block, block);
    const double yy = dot(y, y);
    t[i] = std::sqrt(1.0 + yy);
    a[i] = 1.0 / (1.0 + yy);
    for (int k = 0; k < n; ++k) z[i * n + k] = Complex(y[2 * k], y[2 * k + 1]) / t[i];
  }

  // gradient with respect to z, as complex numbers (d/dRe + i d/dIm)
  std::vector<Complex> gz(m * n);
  double s = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Complex zw{};
      for (int k = 0; k < n; ++k) zw += z[i * n + k] * std::conj(z[j * n + k]);
      const Complex one_minus = 1.0 - zw;
      const double c = std::norm(one_minus);
      const double q = a[i] * a[j] / c;
      const double r = std::sqrt(std::max(0.0, 1.0 - q));
      const double e = r - problem.distance(i, j);
      s += e * e;
      if (r == 0.0) continue;
      // d rho = -dq / (2 rho); dq = q (da_i/a_i + da_j/a_j - dc/c)
      const double coef = 2.0 * e * (-q / (2.0 * r));
      for (int k = 0; k < n; ++k) {
        const Complex zi = z[i * n + k];
        const Complex zj = z[j * n + k];
        gz[i * n + k] += coef * (-2.0 * zi / a[i] + 2.0 * one_minus * zj / c);
        gz[j * n + k] += coef * (-2.0 * zj / a[j] + 2.0 * std::conj(one_minus) * zi / c);
      }
    }

  // chain rule through z = y / t: dz/dy = I/t - y y^T / t^3
  for (std::size_t i = 0; i < m; ++i) {
    const auto y = params.subspan(i * block, block);
    double yg = 0.0;
    for (int k = 0; k < n; ++k) yg += y[2 * k] * gz[i * n + k].real() + y[2 * k + 1] * gz[i * n + k].imag();
    const double t3 = t[i] * t[i] * t[i];
    for (int k = 0; k < n; ++k) {
      grad[i * block + 2 * k] = gz[i * n + k].real() / t[i] - y[2 * k] * yg / t3;
      grad[i * block + 2 * k + 1] = gz[i * n + k].imag() / t[i] - y[2 * k + 1] * yg / t3;
    }
  }
  return s;
}

double gradient_check(const EmbeddingProblem& problem, std::span<const double> params, double h) {
  std::vector<double> grad(params.size()), scratch(params.size());
  stress_and_gradient(problem, params, grad);
  std::vector<double> x(params.begin(), params.end());
  double worst = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double saved = x[k];
    x[k] = saved + h;
    const double fp = stress_and_gradient(problem, x, scratch);
    x[k] = saved - h;
    const double fm = stress_and_gradient(problem, x, scratch);
    x[k] = saved;
    const double fd = (fp - fm) / (2.0 * h);
    const double denom = std::max({std::abs(grad[k]), std::abs(fd), 1e-8});
    worst = std::max(worst, std::abs(grad[k] - fd) / denom);
  }
  return worst;
}

namespace {

struct RunOutcome {
  std::vector<double> params;
  double stress = std::numeric_limits<double>::infinity();
  double gradient_norm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  bool non_finite = false;
};

constexpr std::size_t kHistory = 10;

// L-BFGS with Armijo backtracking (step halving).
RunOutcome minimise(const EmbeddingProblem& problem, std::vector<double> x) {
  const std::size_t dim = x.size();
  const auto& cfg = problem.settings;
  std::vector<double> g(dim), g_new(dim), x_new(dim), dir(dim);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  RunOutcome out;
  double f = stress_and_gradient(problem, x, g);
  int it = 0;
  for (; it < cfg.max_iters; ++it) {
    if (!std::isfinite(f)) {
      out.non_finite = true;
      break;
    }
    const double gnorm = std::sqrt(dot(g, g));
    if (gnorm < cfg.tolerance) {
      out.converged = true;
      break;
    }
    // two-loop recursion
    dir = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * dot(s_hist[k], dir);
      for (std::size_t i = 0; i < dim; ++i) dir[i] -= alpha[k] * y_hist[k][i];
    }
    if (!s_hist.empty()) {
      const double gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (auto& v : dir) v *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * dot(y_hist[k], dir);
      for (std::size_t i = 0; i < dim; ++i) dir[i] += (alpha[k] - beta) * s_hist[k][i];
    }
    for (auto& v : dir) v = -v;
    double slope = dot(g, dir);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (std::size_t i = 0; i < dim; ++i) dir[i] = -g[i];
      slope = -gnorm * gnorm;
    }

    double step = s_hist.empty() ? std::min(1.0, 1.0 / gnorm) : 1.0;
    double f_new = f;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries, step *= 0.5) {
      for (std::size_t i = 0; i < dim; ++i) x_new[i] = x[i] + step * dir[i];
      f_new = stress_and_gradient(problem, x_new, g_new);
      if (std::isfinite(f_new) && f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // no further decrease representable

    std::vector<double> s(dim), y(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-300) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
  }
  out.iterations = it;
  out.stress = out.non_finite ? std::numeric_limits<double>::infinity() : f;
  out.gradient_norm = std::sqrt(dot(g, g));
  out.params = std::move(x);
  return out;
}

// Points uniform in the Euclidean ball of radius 0.5, as parameters.
std::vector<double> initial_parameters(const EmbeddingProblem& problem, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(problem.settings.seed),
                    static_cast<std::uint32_t>(problem.settings.seed >> 32),
                    static_cast<std::uint32_t>(restart), 0xe3bdu};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  const int dim = 2 * problem.target_dim;
  std::vector<double> params;
  params.reserve(problem.parameter_count());
  std::vector<double> v(dim);
  for (std::size_t i = 0; i < problem.size; ++i) {
    double len_sq = 0.0;
    for (auto& c : v) {
      c = gauss(rng);
      len_sq += c * c;
    }
    const double radius = 0.5 * std::pow(unif(rng), 1.0 / dim);
    const double scale = len_sq > 0.0 ? radius / std::sqrt(len_sq) : 0.0;
    const double t = 1.0 / std::sqrt(1.0 - radius * radius);
    for (auto c : v) params.push_back(c * scale * t);
  }
  return params;
}

}  // namespace

EmbeddingResult solve(const EmbeddingProblem& problem) {
  const int restarts = problem.settings.restarts;
  std::vector<RunOutcome> runs(restarts);
  const int workers = std::clamp(problem.settings.parallelism, 1, restarts);
  auto job = [&](int r) { runs[r] = minimise(problem, initial_parameters(problem, r)); };
  if (workers == 1) {
    for (int r = 0; r < restarts; ++r) job(r);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int r = w; r < restarts; r += workers) job(r);
      });
    for (auto& th : pool) th.join();
  }

  // rescore every restart with the closed-form rho so the summaries and the
  // returned stress are directly comparable
  EmbeddingResult result;
  int best = -1;
  double best_stress = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    const auto& run = runs[r];
    const double st = run.non_finite ? std::numeric_limits<double>::infinity()
                                     : stress(problem, to_points(run.params, problem.target_dim));
    result.restarts.push_back({r, st, run.iterations, run.converged, run.non_finite});
    result.iterations_used += run.iterations;
    if (!run.non_finite && (best < 0 || st < best_stress)) {
      best = r;
      best_stress = st;
    }
  }
  result.restarts_used = restarts;
  if (best < 0) throw DomainError("every restart produced a non-finite objective");

  const auto& winner = runs[best];
  result.best_restart = best;
  result.points = to_points(winner.params, problem.target_dim);
  result.stress = best_stress;
  result.converged = winner.converged;
  result.gradient_norm = winner.gradient_norm;
  for (std::size_t i = 0; i < problem.size; ++i)
    for (std::size_t j = i + 1; j < problem.size; ++j) {
      const double r = rho(result.points[i], result.points[j]);
      const double d = problem.distance(i, j);
      result.max_abs_error = std::max(result.max_abs_error, std::abs(r - d));
      const double ratio = r == 0.0 ? std::numeric_limits<double>::infinity() : std::max(r / d, d / r);
      result.max_rel_distortion = std::max(result.max_rel_distortion, ratio);
    }
  return result;
}

}  // namespace rkm

#include "rkm/ball_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "rkm/metrics.hpp"

namespace rkm {

BallPoint ball_automorphism(const BallPoint& a, const BallPoint& z) {
  require_same_dim(a, z);
  if (a.is_origin()) return z;
  // Evaluated in extended precision: for |a| near 1 the factor sqrt(1 - |a|^2)
  // and the denominator lose about log10(1 / (1 - |a|^2)) digits to cancellation.
  using Wide = std::complex<long double>;
  const std::size_t n = a.dim();
  long double a_sq = 0.0L;
  Wide za = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    const Wide ai(a[i]), zi(z[i]);
    a_sq += std::norm(ai);
    za += zi * std::conj(ai);
  }
  const long double s = std::sqrt(1.0L - a_sq);
  const Wide denom = 1.0L - za;
  const Wide proj = za / a_sq;  // P_a z = proj * a
  std::vector<Complex> out(n);
  double norm_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Wide ai(a[i]);
    const Wide pz = proj * ai;
    const Wide qz = Wide(z[i]) - pz;
    out[i] = Complex((ai - pz - s * qz) / denom);
    norm_sq += std::norm(out[i]);
  }
  // rounding can place images of near-boundary points on the sphere
  if (norm_sq >= 1.0) {
    const double shrink = std::nextafter(1.0, 0.0) / std::sqrt(norm_sq);
    for (auto& c : out) c *= shrink;
  }
  return BallPoint(std::move(out));
}

double strengthened_triangle_bound(double d1, double d2) {
  if (!(d1 >= 0.0 && d1 < 1.0) || !(d2 >= 0.0 && d2 < 1.0))
    throw DomainError("strengthened triangle bound needs distances in [0, 1)");
  return (d1 + d2) / (1.0 + d1 * d2);
}

double pseudo_ball_volume(double r, int n) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("pseudohyperbolic radius must lie in [0, 1)");
  if (n < 1) throw DomainError("dimension must be >= 1");
  const double ratio = r * r / ((1.0 - r) * (1.0 + r));
  return std::pow(ratio, n);
}

double log_pseudo_ball_volume(double r, int n) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("log volume needs radius in (0, 1)");
  if (n < 1) throw DomainError("dimension must be >= 1");
  return n * (2.0 * std::log(r) - std::log1p(-r) - std::log1p(r));
}

namespace {

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Uniform point of the Euclidean ball of C^n with radius in [r_lo, r_hi).
void sample_shell(std::mt19937_64& rng, int n, double r_lo, double r_hi, std::vector<double>& x) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  const int dim = 2 * n;
  double len_sq = 0.0;
  do {
    len_sq = 0.0;
    for (int i = 0; i < dim; ++i) {
      x[i] = gauss(rng);
      len_sq += x[i] * x[i];
    }
  } while (len_sq == 0.0);
  const double lo = std::pow(r_lo, dim);
  const double hi = std::pow(r_hi, dim);
  const double t = std::pow(lo + unif(rng) * (hi - lo), 1.0 / dim);
  const double scale = t / std::sqrt(len_sq);
  for (int i = 0; i < dim; ++i) x[i] *= scale;
}

// Runs `streams` independent jobs on up to `parallelism` threads.
void run_streams(int streams, int parallelism, const std::function<void(int)>& job) {
  parallelism = std::clamp(parallelism, 1, streams);
  if (parallelism == 1) {
    for (int s = 0; s < streams; ++s) job(s);
    return;
  }
  std::vector<std::thread> workers;
  for (int t = 0; t < parallelism; ++t)
    workers.emplace_back([&, t] {
      for (int s = t; s < streams; s += parallelism) job(s);
    });
  for (auto& w : workers) w.join();
}

std::mt19937_64 stream_rng(std::uint64_t seed, int stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), 0x5eedu};
  return std::mt19937_64(seq);
}

// Integrates f(x) * (1-|x|^2)^{-(n+1)} over the Euclidean ball of radius `outer`,
// split into radial strata of equal Euclidean volume fraction where requested.
MonteCarloEstimate integrate(double outer, int n, std::uint64_t samples, std::uint64_t seed,
                             int parallelism, int strata,
                             const std::function<bool(const std::vector<double>&)>& inside) {
  const int dim = 2 * n;
  // stratum boundaries t_k with t_k^{2n} equally spaced
  std::vector<double> edges(strata + 1);
  for (int k = 0; k <= strata; ++k)
    edges[k] = outer * std::pow(static_cast<double>(k) / strata, 1.0 / dim);
  edges[strata] = outer;

  std::vector<std::vector<Accumulator>> acc(kMonteCarloStreams, std::vector<Accumulator>(strata));
  std::vector<std::vector<std::uint64_t>> counts(kMonteCarloStreams, std::vector<std::uint64_t>(strata));
  const std::uint64_t per_stratum = std::max<std::uint64_t>(1, samples / strata);

  run_streams(kMonteCarloStreams, parallelism, [&](int stream) {
    auto rng = stream_rng(seed, stream);
    std::vector<double> x(dim);
    for (int k = 0; k < strata; ++k) {
      const std::uint64_t begin = per_stratum * stream / kMonteCarloStreams;
      const std::uint64_t end = per_stratum * (stream + 1) / kMonteCarloStreams;
      auto& a = acc[stream][k];
      for (std::uint64_t i = begin; i < end; ++i) {
        sample_shell(rng, n, edges[k], edges[k + 1], x);
        double f = 0.0;
        if (inside(x)) {
          double norm_sq = 0.0;
          for (double v : x) norm_sq += v * v;
          f = std::pow(1.0 - norm_sq, -(n + 1));
        }
        a.sum += f;
        a.sum_sq += f * f;
      }
      counts[stream][k] = end - begin;
    }
  });

  // each stratum holds 1/strata of the Euclidean volume; c_n * vol(outer ball) = outer^{2n}
  const double total_weight = std::pow(outer, dim);
  MonteCarloEstimate out;
  double var = 0.0;
  for (int k = 0; k < strata; ++k) {
    Accumulator tot;
    std::uint64_t m = 0;
    for (int s = 0; s < kMonteCarloStreams; ++s) {
      tot.sum += acc[s][k].sum;
      tot.sum_sq += acc[s][k].sum_sq;
      m += counts[s][k];
    }
    const double mean = tot.sum / m;
    const double sample_var = std::max(0.0, (tot.sum_sq / m - mean * mean)) * m / std::max<std::uint64_t>(1, m - 1);
    const double w = total_weight / strata;
    out.estimate += w * mean;
    var += w * w * sample_var / m;
    out.samples += m;
  }
  out.std_error = std::sqrt(var);
  return out;
}

void check_mc_args(double r, int n, std::uint64_t samples) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("Monte Carlo volume needs radius in (0, 1)");
  if (n < 1) throw DomainError("dimension must be >= 1");
  if (samples == 0) throw DomainError("Monte Carlo volume needs at least one sample");
}

}  // namespace

MonteCarloEstimate mc_invariant_volume(double r, int n, std::uint64_t samples, std::uint64_t seed,
                                       int parallelism) {
  check_mc_args(r, n, samples);
  const int strata = r > 0.95 ? 32 : 1;
  return integrate(r, n, samples, seed, parallelism, strata,
                   [](const std::vector<double>&) { return true; });
}

MonteCarloEstimate mc_invariant_volume_at(const BallPoint& center, double r, std::uint64_t samples,
                                          std::uint64_t seed, int parallelism) {
  const int n = static_cast<int>(center.dim());
  check_mc_args(r, n, samples);
  // the rho-ball about `center` lies in the Euclidean ball of radius (|c| + r) / (1 + |c| r)
  const double c = std::sqrt(center.norm_sq());
  const double outer = (c + r) / (1.0 + c * r);
  const int strata = outer > 0.95 ? 32 : 1;
  return integrate(outer, n, samples, seed, parallelism, strata, [&](const std::vector<double>& x) {
    std::vector<Complex> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = Complex(x[2 * i], x[2 * i + 1]);
    return rho(BallPoint(std::move(coords)), center) < r;
  });
}

}  // namespace rkm

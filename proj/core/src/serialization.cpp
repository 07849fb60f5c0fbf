#include "rkm/serialization.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "rkm/metrics.hpp"
#include "rkm/version.hpp"

namespace rkm {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, ptr);
}

void to_json(Json& j, const DiskPoint& p) {
  j = Json{{"re", p.value().real()}, {"im", p.value().imag()}, {"defect", p.defect()}, {"angle", p.angle()}};
}

void from_json(const Json& j, DiskPoint& p) {
  if (j.contains("defect")) {
    p = DiskPoint::from_defect(j.at("defect").get<double>(), j.at("angle").get<double>());
  } else {
    p = DiskPoint(j.at("re").get<double>(), j.at("im").get<double>());
  }
}

void to_json(Json& j, const BallPoint& p) {
  j = Json::array();
  for (const auto& c : p.coords()) j.push_back(Json::array({c.real(), c.imag()}));
}

void from_json(const Json& j, BallPoint& p) {
  std::vector<Complex> coords;
  for (const auto& c : j) coords.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  p = BallPoint(std::move(coords));
}

void to_json(Json& j, const PackingCertificate& c) {
  j = Json{{"n", c.n},
           {"K", c.K},
           {"sigma", c.sigma},
           {"N", c.point_count},
           {"log_N", c.log_point_count},
           {"center_distance", c.center_distance},
           {"leading_order_center_distance", c.leading_order_center_distance},
           {"min_separation", c.min_separation},
           {"small_radius", c.small_radius},
           {"enclosing_radius", c.enclosing_radius},
           {"leading_order_enclosing_radius", c.leading_order_enclosing_radius},
           {"enclosure_within_leading_order_radius", c.enclosure_within_leading_order_radius},
           {"log_V_S", c.log_small_volume},
           {"log_V_L", c.log_large_volume},
           {"V_S", c.small_volume()},
           {"V_L", c.large_volume()},
           {"log_packing_ratio", c.log_packing_ratio},
           {"feasible", c.feasible},
           {"separation_mode", to_string(c.separation_mode)},
           {"volume_path", "closed-form log"},
           {"distance_path", "kernel, boundary-defect form"}};
}

void from_json(const Json& j, PackingCertificate& c) {
  c.n = j.at("n").get<int>();
  c.K = j.at("K").get<double>();
  c.sigma = j.at("sigma").get<double>();
  c.point_count = j.at("N").get<double>();
  c.log_point_count = j.at("log_N").get<double>();
  c.center_distance = j.at("center_distance").get<double>();
  c.leading_order_center_distance = j.at("leading_order_center_distance").get<double>();
  c.min_separation = j.at("min_separation").get<double>();
  c.small_radius = j.at("small_radius").get<double>();
  c.enclosing_radius = j.at("enclosing_radius").get<double>();
  c.leading_order_enclosing_radius = j.at("leading_order_enclosing_radius").get<double>();
  c.enclosure_within_leading_order_radius = j.at("enclosure_within_leading_order_radius").get<bool>();
  c.log_small_volume = j.at("log_V_S").get<double>();
  c.log_large_volume = j.at("log_V_L").get<double>();
  c.log_packing_ratio = j.at("log_packing_ratio").get<double>();
  c.feasible = j.at("feasible").get<bool>();
  c.separation_mode =
      j.at("separation_mode").get<std::string>() == "exhaustive" ? SeparationMode::Exhaustive : SeparationMode::Adjacent;
}

void to_json(Json& j, const ThresholdSweep& s) {
  j = Json{{"n", s.n},
           {"K_max", s.K_max},
           {"grid_start", kThresholdGridStart},
           {"grid_step", kThresholdGridStep},
           {"threshold", s.threshold ? Json(*s.threshold) : Json(nullptr)},
           {"monotone", s.monotone},
           {"certificates", s.certificates}};
}

void from_json(const Json& j, ThresholdSweep& s) {
  s.n = j.at("n").get<int>();
  s.K_max = j.at("K_max").get<double>();
  s.threshold.reset();
  if (!j.at("threshold").is_null()) s.threshold = j.at("threshold").get<double>();
  s.monotone = j.at("monotone").get<bool>();
  s.certificates = j.at("certificates").get<std::vector<PackingCertificate>>();
}

void to_json(Json& j, const EmbeddingSettings& s) {
  j = Json{{"restarts", s.restarts},
           {"max_iters", s.max_iters},
           {"tolerance", s.tolerance},
           {"seed", s.seed},
           {"parallelism", s.parallelism}};
}

void from_json(const Json& j, EmbeddingSettings& s) {
  s.restarts = j.at("restarts").get<int>();
  s.max_iters = j.at("max_iters").get<int>();
  s.tolerance = j.at("tolerance").get<double>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.parallelism = j.value("parallelism", 1);
}

void to_json(Json& j, const EmbeddingProblem& p) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < p.size; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < p.size; ++k) row.push_back(p.distance(i, k));
    rows.push_back(std::move(row));
  }
  j = Json{{"source_points", p.source_points},
           {"target_dim", p.target_dim},
           {"distance_matrix", std::move(rows)},
           {"settings", p.settings}};
}

void from_json(const Json& j, EmbeddingProblem& p) {
  const auto settings = j.value("settings", EmbeddingSettings{});
  const int n = j.at("target_dim").get<int>();
  const auto sources = j.value("source_points", std::vector<DiskPoint>{});
  if (!sources.empty()) {
    p = build_problem(sources, n, settings);
    return;
  }
  const auto& rows = j.at("distance_matrix");
  const std::size_t m = rows.size();
  std::vector<double> d;
  d.reserve(m * m);
  for (const auto& row : rows) {
    if (row.size() != m) throw InvalidInput("distance matrix is not square");
    for (const auto& v : row) d.push_back(v.get<double>());
  }
  p = build_problem_from_distances(std::move(d), m, n, settings);
}

void to_json(Json& j, const RestartSummary& r) {
  j = Json{{"restart", r.restart},
           {"stress", r.stress},
           {"iterations", r.iterations},
           {"converged", r.converged},
           {"non_finite", r.non_finite}};
}

void from_json(const Json& j, RestartSummary& r) {
  r.restart = j.at("restart").get<int>();
  r.stress = j.at("stress").is_null() ? INFINITY : j.at("stress").get<double>();
  r.iterations = j.at("iterations").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.non_finite = j.at("non_finite").get<bool>();
}

void to_json(Json& j, const EmbeddingResult& r) {
  j = Json{{"points", r.points},
           {"stress", r.stress},
           {"max_abs_error", r.max_abs_error},
           {"max_rel_distortion", r.max_rel_distortion},
           {"gradient_norm", r.gradient_norm},
           {"iterations_used", r.iterations_used},
           {"restarts_used", r.restarts_used},
           {"best_restart", r.best_restart},
           {"converged", r.converged},
           {"restarts", r.restarts}};
}

void from_json(const Json& j, EmbeddingResult& r) {
  r.points = j.at("points").get<std::vector<BallPoint>>();
  r.stress = j.at("stress").get<double>();
  r.max_abs_error = j.at("max_abs_error").get<double>();
  r.max_rel_distortion = j.at("max_rel_distortion").is_null() ? INFINITY : j.at("max_rel_distortion").get<double>();
  r.gradient_norm = j.at("gradient_norm").get<double>();
  r.iterations_used = j.at("iterations_used").get<int>();
  r.restarts_used = j.at("restarts_used").get<int>();
  r.best_restart = j.at("best_restart").get<int>();
  r.converged = j.at("converged").get<bool>();
  r.restarts = j.at("restarts").get<std::vector<RestartSummary>>();
}

void to_json(Json& j, const CurvatureSample& s) {
  j = Json{{"z", s.z},
           {"alpha_sq", s.alpha_sq},
           {"kappa", s.kappa},
           {"step", s.step},
           {"est_error", s.est_error},
           {"valid", s.valid},
           {"kernel", s.kernel_tag},
           {"normalization", kLaplacianNormalization}};
}

void from_json(const Json& j, CurvatureSample& s) {
  s.z = j.at("z").get<DiskPoint>();
  s.alpha_sq = j.at("alpha_sq").get<double>();
  s.kappa = j.at("kappa").get<double>();
  s.step = j.at("step").get<double>();
  s.est_error = j.at("est_error").get<double>();
  s.valid = j.at("valid").get<bool>();
  s.kernel_tag = j.at("kernel").get<std::string>();
}

void to_json(Json& j, const MonteCarloEstimate& e) {
  j = Json{{"estimate", e.estimate}, {"std_error", e.std_error}, {"samples", e.samples}};
}

void from_json(const Json& j, MonteCarloEstimate& e) {
  e.estimate = j.at("estimate").get<double>();
  e.std_error = j.at("std_error").get<double>();
  e.samples = j.at("samples").get<std::uint64_t>();
}

Json make_artifact(std::string_view kind, Json config, Json payload) {
  return Json{{"tool", "rkm"},
              {"version", kVersion},
              {"schema_version", kSchemaVersion},
              {"kind", std::string(kind)},
              {"config", std::move(config)},
              {"data", std::move(payload)}};
}

namespace {

void write_value(std::ostream& os, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        os << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        write_value(os, it.value(), indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // arrays of scalars stay on one line
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      os << '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) os << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        write_value(os, e, indent, depth + 1);
      }
      if (!flat) newline(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v))
        os << format_double(v);
      else
        os << "null";
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

void write_json(std::ostream& os, const Json& j, int indent) {
  write_value(os, j, indent, 0);
  os << '\n';
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

void write_curvature_csv(std::ostream& os, std::span<const CurvatureSample> samples) {
  os << "z_re,z_im,alpha_sq,kappa,step,est_error,kernel,normalization,valid\n";
  for (const auto& s : samples) {
    os << format_double(s.z.value().real()) << ',' << format_double(s.z.value().imag()) << ','
       << format_double(s.alpha_sq) << ',' << format_double(s.kappa) << ',' << format_double(s.step) << ','
       << format_double(s.est_error) << ',' << s.kernel_tag << ',' << kLaplacianNormalization << ','
       << (s.valid ? 1 : 0) << '\n';
  }
}

void write_residual_csv(std::ostream& os, const EmbeddingProblem& problem, const EmbeddingResult& result) {
  os << "i,j,target,realized,residual\n";
  for (std::size_t i = 0; i < problem.size; ++i)
    for (std::size_t j = i + 1; j < problem.size; ++j) {
      const double realized = rho(result.points[i], result.points[j]);
      const double target = problem.distance(i, j);
      os << i << ',' << j << ',' << format_double(target) << ',' << format_double(realized) << ','
         << format_double(realized - target) << '\n';
    }
}

}  // namespace rkm

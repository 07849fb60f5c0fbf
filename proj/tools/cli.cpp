#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rkm/asymptotics.hpp"
#include "rkm/metrics.hpp"
#include "rkm/verify.hpp"
#include "rkm/version.hpp"

namespace rkm::cli {

namespace {

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidInput("not a number: '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int effective_parallelism(const RunConfig& c) {
  if (c.parallelism > 0) return c.parallelism;
  return std::max(1u, std::thread::hardware_concurrency());
}

bool is_csv(const RunConfig& c) { return c.format == "csv"; }

std::string csv_header(const RunConfig& c) {
  return "# rkm " + std::string(kVersion) + " config=" + config_to_json(c).dump() + "\n";
}

int cmd_metric(const RunConfig& c, std::ostream& out) {
  if (c.points.size() != 2) throw InvalidInput("metric needs exactly two --point values");
  const auto id = KernelId::parse(c.kernel);
  const auto x = parse_coords(c.points[0]);
  const auto w = parse_coords(c.points[1]);
  DeltaDiagnostics diag;
  Json data;
  if (id.on_disk()) {
    if (x.size() != 1 || w.size() != 1) throw InvalidInput(id.tag() + " takes points of the disk");
    const DiskPoint px(x[0]), pw(w[0]);
    data["delta"] = delta(id, px, pw, &diag);
    data["rho"] = rho(px, pw);
    data["kernel_value"] = {kernel_eval(id, px, pw).real(), kernel_eval(id, px, pw).imag()};
  } else {
    const BallPoint px(x), pw(w);
    data["delta"] = delta(id, px, pw, &diag);
    data["rho"] = rho(px, pw);
    data["kernel_value"] = {kernel_eval(id, px, pw).real(), kernel_eval(id, px, pw).imag()};
  }
  data["kernel"] = id.tag();
  data["diagnostics"] = {{"one_minus_ratio", diag.one_minus_ratio},
                         {"clamped", diag.clamped},
                         {"log_magnitude_path", diag.log_magnitude_path},
                         {"near_boundary", diag.near_boundary}};
  if (is_csv(c)) {
    out << csv_header(c) << "kernel,delta,rho\n"
        << data["kernel"].get<std::string>() << ',' << format_double(data["delta"].get<double>()) << ','
        << format_double(data["rho"].get<double>()) << '\n';
  } else {
    write_json(out, make_artifact("metric", config_to_json(c), data));
  }
  return 0;
}

int cmd_volume(const RunConfig& c, std::ostream& out) {
  const auto radii = c.grid.empty() ? std::vector<double>{c.r} : parse_grid(c.grid);
  Json rows = Json::array();
  for (double r : radii) {
    const auto mc = mc_invariant_volume(r, c.n, c.samples, c.seed, effective_parallelism(c));
    const double exact = pseudo_ball_volume(r, c.n);
    rows.push_back({{"n", c.n},
                    {"r", r},
                    {"closed_form", exact},
                    {"monte_carlo", mc},
                    {"z_score", (mc.estimate - exact) / mc.std_error}});
  }
  if (is_csv(c)) {
    out << csv_header(c) << "n,r,closed_form,mc_estimate,mc_std_error,z_score\n";
    for (const auto& row : rows)
      out << row["n"].get<int>() << ',' << format_double(row["r"].get<double>()) << ','
          << format_double(row["closed_form"].get<double>()) << ','
          << format_double(row["monte_carlo"]["estimate"].get<double>()) << ','
          << format_double(row["monte_carlo"]["std_error"].get<double>()) << ','
          << format_double(row["z_score"].get<double>()) << '\n';
  } else {
    write_json(out, make_artifact("volume", config_to_json(c), rows));
  }
  return 0;
}

void certificate_csv_row(std::ostream& out, const PackingCertificate& p) {
  out << p.n << ',' << format_double(p.K) << ',' << format_double(p.point_count) << ','
      << format_double(p.min_separation) << ',' << format_double(p.small_radius) << ','
      << format_double(p.enclosing_radius) << ',' << format_double(p.log_small_volume) << ','
      << format_double(p.log_large_volume) << ',' << format_double(p.log_packing_ratio) << ','
      << (p.feasible ? "true" : "false") << '\n';
}

constexpr const char* kCertificateCsvHeader =
    "n,K,N,min_separation,small_radius,enclosing_radius,log_V_S,log_V_L,log_packing_ratio,feasible\n";

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const auto cert = certificate(c.n, c.K, c.exhaustive ? SeparationMode::Exhaustive : SeparationMode::Adjacent);
  if (is_csv(c)) {
    out << csv_header(c) << kCertificateCsvHeader;
    certificate_csv_row(out, cert);
  } else {
    write_json(out, make_artifact("certificate", config_to_json(c), cert));
  }
  return 0;
}

int cmd_threshold(const RunConfig& c, std::ostream& out) {
  std::vector<int> dims;
  if (c.grid.empty()) {
    for (int n = 1; n <= c.n; ++n) dims.push_back(n);
  } else {
    for (double v : parse_grid(c.grid)) dims.push_back(static_cast<int>(v));
  }
  std::vector<ThresholdSweep> sweeps;
  for (int n : dims) sweeps.push_back(threshold_sweep(n, c.K, is_csv(c)));
  if (is_csv(c)) {
    out << csv_header(c) << kCertificateCsvHeader;
    for (const auto& s : sweeps)
      for (const auto& cert : s.certificates) certificate_csv_row(out, cert);
  } else {
    Json data = Json::array();
    for (const auto& s : sweeps) data.push_back(s);
    write_json(out, make_artifact("threshold", config_to_json(c), data));
  }
  return 0;
}

int cmd_embed(const RunConfig& c, std::ostream& out) {
  EmbeddingSettings settings;
  settings.restarts = c.restarts;
  settings.max_iters = c.max_iters;
  settings.tolerance = c.tolerance;
  settings.seed = c.seed;
  settings.parallelism = effective_parallelism(c);
  EmbeddingProblem problem;
  if (!c.problem_file.empty()) {
    std::ifstream in(c.problem_file);
    if (!in) throw InvalidInput("cannot open problem file " + c.problem_file);
    Json j = Json::parse(in);
    if (j.contains("data")) j = j.at("data");
    if (j.contains("problem")) j = j.at("problem");
    j["settings"] = settings;
    problem = j.get<EmbeddingProblem>();
  } else if (!c.points.empty()) {
    std::vector<DiskPoint> pts;
    for (const auto& p : c.points) {
      const auto coords = parse_coords(p);
      if (coords.size() != 1) throw InvalidInput("embedding sources are disk points");
      pts.emplace_back(coords[0]);
    }
    problem = build_problem(pts, c.n, settings);
  } else {
    problem = build_problem(ring_configuration(c.K, static_cast<std::size_t>(c.count)), c.n, settings);
  }
  const auto result = solve(problem);
  if (is_csv(c)) {
    out << csv_header(c);
    write_residual_csv(out, problem, result);
  } else {
    write_json(out, make_artifact("embedding", config_to_json(c), {{"problem", problem}, {"result", result}}));
  }
  return 0;
}

int cmd_curvature(const RunConfig& c, std::ostream& out) {
  const auto id = KernelId::parse(c.kernel);
  const auto radii = c.grid.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75} : parse_grid(c.grid);
  std::vector<DiskPoint> pts;
  for (double r : radii)
    for (int a = 0; a < std::max(1, c.angles); ++a)
      pts.emplace_back(std::polar(r, 2.0 * std::numbers::pi * a / std::max(1, c.angles)));
  const auto samples = sample_curvature(id, pts, c.step, effective_parallelism(c));
  if (is_csv(c)) {
    out << csv_header(c);
    write_curvature_csv(out, samples);
  } else {
    write_json(out, make_artifact("curvature", config_to_json(c), samples));
  }
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.parallelism = effective_parallelism(c);
  const auto results = run_verification(opt, [&](const CheckResult& r) {
    err << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
  });
  int failures = 0;
  Json rows = Json::array();
  for (const auto& r : results) {
    failures += r.passed ? 0 : 1;
    rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  const Json data = {{"checks", rows},
                     {"passed", static_cast<int>(results.size()) - failures},
                     {"failed", failures}};
  if (is_csv(c)) {
    out << csv_header(c) << "name,passed\n";
    for (const auto& r : results) out << '"' << r.name << "\"," << (r.passed ? 1 : 0) << '\n';
  } else {
    write_json(out, make_artifact("verify", config_to_json(c), data));
  }
  err << results.size() - failures << " passed, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

Json config_to_json(const RunConfig& c) {
  return Json{{"subcommand", c.subcommand},
              {"kernel", c.kernel},
              {"n", c.n},
              {"K", c.K},
              {"r", c.r},
              {"grid", c.grid},
              {"seed", c.seed},
              {"restarts", c.restarts},
              {"format", c.format},
              {"parallelism", c.parallelism},
              {"points", c.points},
              {"samples", c.samples},
              {"count", c.count},
              {"max_iters", c.max_iters},
              {"tolerance", c.tolerance},
              {"step", c.step},
              {"angles", c.angles},
              {"exhaustive", c.exhaustive},
              {"problem_file", c.problem_file}};
}

std::vector<double> parse_grid(const std::string& grid) {
  std::vector<double> values;
  if (grid.find(':') != std::string::npos) {
    const auto parts = split(grid, ':');
    if (parts.size() != 3) throw InvalidInput("grid must be start:stop:step");
    const double a = parse_double(parts[0]), b = parse_double(parts[1]), h = parse_double(parts[2]);
    if (!(h > 0.0) || b < a) throw InvalidInput("grid needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((b - a) / h + 1e-9));
    for (long i = 0; i <= count; ++i) values.push_back(a + h * static_cast<double>(i));
    return values;
  }
  for (auto part : split(grid, ',')) values.push_back(parse_double(part));
  return values;
}

std::vector<Complex> parse_coords(const std::string& text) {
  std::vector<Complex> coords;
  for (auto part : split(text, ';')) {
    const auto comps = split(part, ',');
    if (comps.size() == 1) {
      coords.emplace_back(parse_double(comps[0]), 0.0);
    } else if (comps.size() == 2) {
      coords.emplace_back(parse_double(comps[0]), parse_double(comps[1]));
    } else {
      throw InvalidInput("coordinate must be 're' or 're,im': '" + std::string(part) + "'");
    }
  }
  return coords;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.format != "json" && config.format != "csv") throw InvalidInput("--format must be json or csv");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) throw InvalidInput("cannot write " + config.out);
    sink = &file;
  }
  const auto& cmd = config.subcommand;
  if (cmd == "metric") return cmd_metric(config, *sink);
  if (cmd == "volume") return cmd_volume(config, *sink);
  if (cmd == "certify") return cmd_certify(config, *sink);
  if (cmd == "threshold") return cmd_threshold(config, *sink);
  if (cmd == "embed") return cmd_embed(config, *sink);
  if (cmd == "curvature") return cmd_curvature(config, *sink);
  if (cmd == "verify") return cmd_verify(config, *sink, err);
  throw InvalidInput("unknown subcommand '" + cmd + "'");
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for reproducing-kernel metrics on complex balls"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--parallelism", cfg.parallelism, "Worker threads (0 = all cores)");
  };

  auto* metric = app.add_subcommand("metric", "Print delta and rho for two points");
  metric->add_option("--kernel", cfg.kernel, "dirichlet | da:N | alpha:A | logpow:M");
  metric->add_option("--point", cfg.points, "Point as 're,im' (ball: 're,im;re,im')")->expected(2);
  common(metric);

  auto* volume = app.add_subcommand("volume", "Invariant volume: closed form vs Monte Carlo");
  volume->add_option("--n", cfg.n, "Ball dimension");
  volume->add_option("--r", cfg.r, "Pseudohyperbolic radius");
  volume->add_option("--grid", cfg.grid, "Radii, start:stop:step or comma list");
  volume->add_option("--samples", cfg.samples, "Monte Carlo samples per radius");
  common(volume);

  auto* certify = app.add_subcommand("certify", "Packing certificate at one (n, K)");
  certify->add_option("--n", cfg.n, "Ambient dimension");
  certify->add_option("--K", cfg.K, "Boundary log-scale K >= 5");
  certify->add_flag("--exhaustive", cfg.exhaustive, "Scan every index gap for the minimum separation");
  common(certify);

  auto* threshold = app.add_subcommand("threshold", "Obstruction thresholds for n = 1..N");
  threshold->add_option("--n", cfg.n, "Largest ambient dimension");
  threshold->add_option("--K", cfg.K, "K_max of the sweep");
  threshold->add_option("--grid", cfg.grid, "Explicit list of dimensions");
  common(threshold);

  auto* embed = app.add_subcommand("embed", "Minimal-stress embedding into the ball of C^n");
  embed->add_option("--n", cfg.n, "Target dimension");
  embed->add_option("--K", cfg.K, "Ring log-scale (default source)");
  embed->add_option("--count", cfg.count, "Number of ring points");
  embed->add_option("--point", cfg.points, "Explicit source points 're,im'");
  embed->add_option("--problem", cfg.problem_file, "Problem JSON file");
  embed->add_option("--restarts", cfg.restarts, "Random restarts");
  embed->add_option("--max-iters", cfg.max_iters, "Iterations per restart");
  embed->add_option("--tolerance", cfg.tolerance, "Gradient-norm tolerance");
  common(embed);

  auto* curvature = app.add_subcommand("curvature", "Metric density and curvature samples");
  curvature->add_option("--kernel", cfg.kernel, "Disk kernel");
  curvature->add_option("--grid", cfg.grid, "Radii, start:stop:step or comma list");
  curvature->add_option("--angles", cfg.angles, "Angles per radius");
  curvature->add_option("--step", cfg.step, "Stencil spacing");
  common(curvature);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  try {
    return run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "rkm: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace rkm::cli

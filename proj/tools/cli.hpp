#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rkm/serialization.hpp"

namespace rkm::cli {

/// Everything a run depends on. Echoed verbatim into each artifact.
struct RunConfig {
  std::string subcommand;  // metric | volume | certify | threshold | embed | curvature | verify
  std::string kernel = "dirichlet";
  int n = 1;
  double K = 10.0;
  double r = 0.5;
  std::string grid;        // "a:b:step" or "v1,v2,..."
  std::uint64_t seed = 1;
  int restarts = 20;
  std::string out;         // empty: stdout
  std::string format = "json";
  int parallelism = 0;     // 0: hardware concurrency

  std::vector<std::string> points;  // metric / embed: "re,im;re,im;..."
  std::uint64_t samples = 1000000;
  int count = 8;
  int max_iters = 5000;
  double tolerance = 1e-10;
  double step = 1e-2;
  int angles = 4;
  bool exhaustive = false;
  std::string problem_file;
};

Json config_to_json(const RunConfig& config);

/// Parses "a:b:step" (inclusive) or a comma separated list.
std::vector<double> parse_grid(const std::string& grid);

/// Parses "re,im;re,im" into coordinates; a bare "re" is a real coordinate.
std::vector<Complex> parse_coords(const std::string& text);

/// Dispatches one subcommand. Artifacts go to config.out (or `out`); diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main_entry(int argc, char** argv);

}  // namespace rkm::cli

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rkm {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 20240601;
  /// Random sample counts per check; the acceptance suite uses 1e5.
  int samples = 20000;
  int parallelism = 1;
};

/// Invariant sweep behind `rkm verify`: identities, metric axioms, automorphism
/// invariance, volume, packing, embedder and curvature checks at reduced sizes.
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace rkm

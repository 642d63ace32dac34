#pragma once

// Exit criteria of the simulator, runnable offline from the CLI (validate
// mode) and from the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

#include "vibqubit/report.hpp"

namespace vibq::cli {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  double value;      ///< worst measured quantity
  double threshold;  ///< bound it is compared against
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  /// Criterion 9 reruns 1-8 and compares the rendered bytes.
  bool include_determinism = true;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

Table acceptance_table(const std::vector<CriterionResult>& results, std::uint64_t seed);

/// Frozen regression bounds for criterion 6 (Omega/nu = 2, nu t = 10).
struct ScalingBound {
  double eta;
  double max_infidelity;
};
const std::vector<ScalingBound>& frozen_scaling_bounds();

}  // namespace vibq::cli

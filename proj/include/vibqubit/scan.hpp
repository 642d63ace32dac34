#pragma once

// Parameter-regime scan comparing the analytic solution with exact
// propagation of the full Hamiltonian, with a truncation convergence check.

#include <string>
#include <vector>

#include "vibqubit/protocols.hpp"

namespace vibq {

struct ScanConfig {
  std::vector<double> etas;
  std::vector<double> omegas;  ///< in units of nu
  std::vector<double> times;   ///< in units of 1/nu
  double nu = 1.0;
  int dim = 64;
  int guard = kDefaultGuard;
  /// Each point is repeated at dim + convergence_step.
  int convergence_step = 32;
  double convergence_tolerance = 1e-6;
  Outcome outcome = Outcome::excited;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

struct ScanRecord {
  double eta = 0.0;
  double omega = 0.0;
  double time = 0.0;
  int dim = 0;
  double epsilon = 0.0;
  double lambda = 0.0;
  double delta_jcm = 0.0;
  double beta_minus_abs = 0.0;
  bool epsilon_warning = false;
  /// 1 - F(analytic, exact) at dim and at dim + convergence_step.
  double infidelity = 0.0;
  double infidelity_check = 0.0;
  bool converged = false;
  /// Exact-pipeline qubit leakage for the configured outcome.
  double leakage = 0.0;
  double p_excited = 0.0;
  double tail = 0.0;
  /// Empty when the point succeeded.
  std::string error;
};

/// One record per (eta, omega, t), ordered eta-major then omega then t,
/// independent of worker scheduling. Per-point failures are reported in the
/// record's error field.
std::vector<ScanRecord> regime_scan(const ScanConfig& config);

}  // namespace vibq

#include "vibqubit/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace vibq {

namespace {

struct PointResult {
  std::vector<double> infidelity;
  std::vector<SpinBosonState> exact;
};

// Infidelity between the two pipelines over all times at one truncation.
PointResult compare_pipelines(const IonParams& params, const std::vector<double>& times,
                              int dim, int guard) {
  const SpinBosonState psi0 = prepare_initial(params, dim, guard);
  const AnalyticEvolver analytic(params, dim);
  const ExactEvolver exact(params, dim, guard);
  PointResult out;
  for (double t : times) {
    SpinBosonState e = exact.evolve(psi0, t);
    out.infidelity.push_back(1.0 - fidelity(analytic.evolve(psi0, t), e));
    out.exact.push_back(std::move(e));
  }
  return out;
}

void fill_parameters(ScanRecord& r, const IonParams& params, double t, int dim) {
  const DerivedParams d = derive(params);
  r.eta = params.eta;
  r.omega = params.omega;
  r.time = t;
  r.dim = dim;
  r.epsilon = d.epsilon;
  r.lambda = d.lambda;
  r.delta_jcm = d.delta_jcm;
  r.beta_minus_abs = std::abs(d.beta_minus);
  r.epsilon_warning = d.epsilon_warning;
}

void scan_point(const ScanConfig& cfg, double eta, double omega, ScanRecord* rows) {
  IonParams params{cfg.nu, omega, eta, 0.0};
  const std::size_t nt = cfg.times.size();
  for (std::size_t k = 0; k < nt; ++k) fill_parameters(rows[k], params, cfg.times[k], cfg.dim);
  try {
    params.validate();
    const PointResult base = compare_pipelines(params, cfg.times, cfg.dim, cfg.guard);
    const PointResult check =
        compare_pipelines(params, cfg.times, cfg.dim + cfg.convergence_step, cfg.guard);
    for (std::size_t k = 0; k < nt; ++k) {
      ScanRecord& r = rows[k];
      const SpinBosonState& state = base.exact[k];
      r.infidelity = base.infidelity[k];
      r.infidelity_check = check.infidelity[k];
      r.converged =
          std::abs(r.infidelity - r.infidelity_check) < cfg.convergence_tolerance;
      r.p_excited = state.probability(Spin::excited) / state.norm_squared();
      r.tail = state.tail(cfg.guard);
      try {
        const MeasurementRecord m = conditional_measure(state, cfg.outcome);
        r.leakage = displace_to_qubit(m, params, r.time).qubit.leakage;
      } catch (const Error& e) {
        r.error = e.what();
      }
    }
  } catch (const Error& e) {
    for (std::size_t k = 0; k < nt; ++k) rows[k].error = e.what();
  }
}

}  // namespace

std::vector<ScanRecord> regime_scan(const ScanConfig& cfg) {
  if (cfg.etas.empty() || cfg.omegas.empty() || cfg.times.empty()) {
    throw ContractViolation("regime_scan: eta, omega and time grids must be nonempty");
  }
  const std::size_t nt = cfg.times.size();
  const std::size_t points = cfg.etas.size() * cfg.omegas.size();
  std::vector<ScanRecord> records(points * nt);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points; i = next++) {
      const double eta = cfg.etas[i / cfg.omegas.size()];
      const double omega = cfg.omegas[i % cfg.omegas.size()];
      scan_point(cfg, eta, omega, records.data() + i * nt);
    }
  };

  unsigned threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(points));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }
  return records;
}

}  // namespace vibq

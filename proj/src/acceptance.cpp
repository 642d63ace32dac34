#include "vibqubit/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "vibqubit/scan.hpp"

namespace vibq::cli {

namespace {

std::string fmt(double v) { return format_real(v); }

CriterionResult make(int id, std::string name, double value, double threshold,
                     std::string detail) {
  return CriterionResult{id, std::move(name), value <= threshold, value, threshold,
                         std::move(detail)};
}

IonParams example(double eta = 0.3, double omega = 2.0) { return IonParams{1.0, omega, eta, 0.0}; }

CriterionResult epsilon_reproduction() {
  const DerivedParams d = derive(example());
  const double err = std::abs(d.epsilon - (-0.03));
  return make(1, "epsilon reproduction", err, 1e-16,
              "epsilon=" + fmt(d.epsilon) + " expected -0.03");
}

CriterionResult counter_rotating_cancellation() {
  const IonParams p = example();
  const DerivedParams d = derive(p);
  const LadderCouplings c = project_ladder_couplings(build_h2_first_order(p, 64), kDefaultGuard);
  const double worst = std::max({std::abs(c.a_sigma_minus), std::abs(c.adag_sigma_plus),
                                 std::abs(c.a_sigma_plus - kI * d.lambda)});
  return make(2, "counter-rotating cancellation", worst, 1e-10,
              "|a s-|=" + fmt(std::abs(c.a_sigma_minus)) + " |a+ s+|=" +
                  fmt(std::abs(c.adag_sigma_plus)) + " |a s+ - i lambda|=" +
                  fmt(std::abs(c.a_sigma_plus - kI * d.lambda)));
}

CriterionResult conjugation_identities() {
  const IonParams p = example(0.2, 2.0);
  const int dim = 96;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  const CMatrix t1 = build_t1(p, dim).matrix();
  const CMatrix lin = t1 * build_h_full(p, dim).matrix() * t1.adjoint();
  const double r1 = sub.norm(lin - build_h1(p, dim).matrix());
  const IdentityFit fit =
      compare_modulo_identity(h2_by_conjugation(p, dim).matrix(), build_h2_exact(p, dim).matrix(), sub);
  return make(3, "conjugation identities", std::max(r1, fit.residual), 1e-8,
              "T1 H T1^dag - H1: " + fmt(r1) + "; T2^dag H1 T2 - H2 - cI: " + fmt(fit.residual) +
                  " (c=" + fmt(fit.constant.real()) + ")");
}

CriterionResult propagator_equivalence() {
  const IonParams p = example();
  const int dim = 64;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  const DerivedParams d = derive(p);
  const SpectralPropagator exact(build_h_jcm(p, dim));
  double worst = 0.0;
  std::string detail;
  for (double t : {1.0, 5.0, 10.0}) {
    const double r = sub.norm(jcm_propagator(d, t, dim).matrix() - exact.at(t).matrix());
    worst = std::max(worst, r);
    detail += "t=" + fmt(t) + ":" + fmt(r) + " ";
  }
  return make(4, "propagator equivalence", worst, 1e-9, detail);
}

CriterionResult closed_form_consistency() {
  const IonParams p = example();
  const int dim = 64;
  const SpinBosonState psi0 = prepare_initial(p, dim);
  const AnalyticEvolver analytic(p, dim);
  double worst = 0.0;
  std::string detail;
  for (double t : {1.0, 5.0, 10.0}) {
    const double deficit = 1.0 - fidelity(evolved_closed_form(p, t, dim), analytic.evolve(psi0, t));
    worst = std::max(worst, deficit);
    detail += "t=" + fmt(t) + ":" + fmt(deficit) + " ";
  }
  return make(5, "closed-form consistency", worst, 1e-8, detail);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CriterionResult approximation_scaling(unsigned threads) {
  ScanConfig cfg;
  for (const ScalingBound& b : frozen_scaling_bounds()) cfg.etas.push_back(b.eta);
  std::sort(cfg.etas.begin(), cfg.etas.end());
  cfg.omegas = {2.0};
  cfg.times = {10.0};
  cfg.dim = 64;
  cfg.threads = threads;
  const std::vector<ScanRecord> rows = regime_scan(cfg);

  std::vector<double> etas, infid;
  bool ok = true;
  std::string detail;
  for (const ScanRecord& r : rows) {
    if (!r.error.empty()) return make(6, "approximation scaling", 1.0, 0.0, r.error);
    etas.push_back(r.eta);
    infid.push_back(r.infidelity);
    ok = ok && r.converged;
    detail += "eta=" + fmt(r.eta) + ":" + fmt(r.infidelity) + " ";
  }
  for (std::size_t i = 1; i < infid.size(); ++i) ok = ok && infid[i] > infid[i - 1];
  for (const ScalingBound& b : frozen_scaling_bounds()) {
    const auto it = std::find(etas.begin(), etas.end(), b.eta);
    ok = ok && it != etas.end() && infid[it - etas.begin()] <= b.max_infidelity;
  }
  const double slope = loglog_slope(etas, infid);
  ok = ok && slope >= 1.5 && slope <= 2.5;
  detail += "slope=" + fmt(slope) + " monotone+converged+bounded=" + (ok ? "yes" : "no");
  // value/threshold report the slope's distance outside [1.5, 2.5].
  const double outside = std::max({0.0, 1.5 - slope, slope - 2.5});
  CriterionResult res = make(6, "approximation scaling", outside, 0.0, detail);
  res.passed = ok;
  return res;
}

CriterionResult cat_checks() {
  const IonParams p = example();
  const int dim = 64;
  const CatState cat = cat_state(p, dim);
  const double norm_err = std::abs(cat.state.norm_squared() - 1.0);
  const double deficit = 1.0 - fidelity(cat.state, evolved_closed_form(p, cat.t_cat, dim));
  const double c1 = std::abs(qubit_closed_form(p, cat.t_cat).c1);
  CriterionResult r = make(7, "cat state", std::max({norm_err / 1e-12, deficit / 1e-9, c1 / 1e-10}),
                           1.0,
                           "value is the worst ratio to tolerance (1e-12, 1e-9, 1e-10); t_cat=" +
                               fmt(cat.t_cat) + " |norm-1|=" + fmt(norm_err) + " 1-F=" +
                               fmt(deficit) + " |c1|=" + fmt(c1));
  return r;
}

CriterionResult qubit_protocol(std::uint64_t seed) {
  const int dim = 64;
  bool ok = true;
  std::string detail;

  // Probability completeness and analytic leakage on several evolved states.
  const IonParams p = example();
  const DerivedParams d = derive(p);
  const double quarter = (std::numbers::pi / 2.0) / d.alpha(1.0);
  const SpinBosonState psi0 = prepare_initial(p, dim);
  const AnalyticEvolver analytic(p, dim);
  const ExactEvolver exact(p, dim);
  double worst_sum = 0.0;
  double worst_leak = 0.0;
  for (double t : {quarter, 1.0, 5.0, 10.0}) {
    for (const SpinBosonState& s :
         {evolved_closed_form(p, t, dim), analytic.evolve(psi0, t), exact.evolve(psi0, t)}) {
      worst_sum = std::max(worst_sum, std::abs(s.probability(Spin::excited) +
                                               s.probability(Spin::ground) - 1.0));
    }
    for (const SpinBosonState& s : {evolved_closed_form(p, t, dim), analytic.evolve(psi0, t)}) {
      for (Outcome o : {Outcome::excited, Outcome::ground}) {
        const DisplacedQubit q = displace_to_qubit(conditional_measure(s, o), p, t);
        worst_leak = std::max(worst_leak, q.qubit.leakage);
      }
    }
  }
  ok = ok && worst_sum <= 1e-10 && worst_leak <= 1e-10;
  detail += "|Pe+Pg-1|=" + fmt(worst_sum) + " analytic leakage=" + fmt(worst_leak);

  // Exact-pipeline leakage shrinks with eta.
  std::vector<double> leaks;
  for (double eta : {0.3, 0.15, 0.075}) {
    const IonParams pe = example(eta);
    const SpinBosonState s = ExactEvolver(pe, dim).evolve(prepare_initial(pe, dim), 5.0);
    leaks.push_back(displace_to_qubit(conditional_measure(s, Outcome::excited), pe, 5.0).qubit.leakage);
  }
  ok = ok && leaks[0] > leaks[1] && leaks[1] > leaks[2];
  detail += " exact leakage(eta=.3,.15,.075)=" + fmt(leaks[0]) + "," + fmt(leaks[1]) + "," +
            fmt(leaks[2]);

  // Seeded sampling wrapper.
  const MeasurementRecord sampled = sample_measurement(exact.evolve(psi0, 5.0), seed);
  detail += std::string(" sampled outcome=") + to_string(sampled.outcome) +
            " p=" + fmt(sampled.probability);

  CriterionResult r = make(8, "qubit protocol", std::max(worst_sum, worst_leak), 1e-10, detail);
  r.passed = ok;
  return r;
}

CriterionResult guarded(int id, const std::string& name, const std::function<CriterionResult()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return CriterionResult{id, name, false, 1.0, 0.0, std::string("error: ") + e.what()};
  }
}

std::vector<CriterionResult> core_criteria(const AcceptanceOptions& o) {
  std::vector<CriterionResult> out;
  out.push_back(guarded(1, "epsilon reproduction", epsilon_reproduction));
  out.push_back(guarded(2, "counter-rotating cancellation", counter_rotating_cancellation));
  out.push_back(guarded(3, "conjugation identities", conjugation_identities));
  out.push_back(guarded(4, "propagator equivalence", propagator_equivalence));
  out.push_back(guarded(5, "closed-form consistency", closed_form_consistency));
  out.push_back(guarded(6, "approximation scaling", [&] { return approximation_scaling(o.threads); }));
  out.push_back(guarded(7, "cat state", cat_checks));
  out.push_back(guarded(8, "qubit protocol", [&] { return qubit_protocol(o.seed); }));
  return out;
}

std::string render(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  std::ostringstream os;
  write_csv(os, acceptance_table(results, seed));
  return os.str();
}

}  // namespace

const std::vector<ScalingBound>& frozen_scaling_bounds() {
  // Calibrated with the exact oracle at N = 64 (checked against N = 96),
  // plus 5% headroom.
  static const std::vector<ScalingBound> bounds = {
      {0.05, 9.2288e-05},  // calibrated 8.789298e-05
      {0.1, 3.6701e-04},  // calibrated 3.495376e-04
      {0.2, 1.4464e-03},  // calibrated 1.377479e-03
      {0.3, 3.2817e-03},  // calibrated 3.125448e-03
  };
  return bounds;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> results = core_criteria(options);
  if (options.include_determinism) {
    const std::string first = render(results, options.seed);
    const std::string second = render(core_criteria(options), options.seed);
    const bool same = first == second;
    results.push_back(CriterionResult{9, "determinism", same, same ? 0.0 : 1.0, 0.0,
                                      same ? "repeat run byte-identical (" +
                                                 std::to_string(first.size()) + " bytes)"
                                           : "repeat run differs"});
  }
  return results;
}

Table acceptance_table(const std::vector<CriterionResult>& results, std::uint64_t seed) {
  Table t;
  t.name = "validate";
  t.meta = {{"schema", "vibqubit-validate/1"},
            {"units", "times in 1/nu, frequencies in nu"},
            {"seed", std::to_string(seed)}};
  t.columns = {"id", "criterion", "passed", "value", "threshold", "detail"};
  for (const CriterionResult& r : results) {
    t.add_row({static_cast<long long>(r.id), r.name, r.passed, r.value, r.threshold, r.detail});
  }
  return t;
}

}  // namespace vibq::cli

#include "vibqubit/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "vibqubit/acceptance.hpp"
#include "vibqubit/scan.hpp"
#include "vibqubit/wigner.hpp"

namespace vibq::cli {

namespace {

const char* to_string(Pipeline p) {
  switch (p) {
    case Pipeline::exact: return "exact";
    case Pipeline::analytic: return "analytic";
    case Pipeline::closed_form: return "closed_form";
  }
  return "?";
}

std::vector<std::pair<std::string, std::string>> common_meta(const RunConfig& cfg,
                                                             const std::string& schema) {
  const DerivedParams d = derive(cfg.params);
  return {{"schema", schema},
          {"mode", to_string(cfg.mode)},
          {"units", "times in 1/nu, frequencies in nu"},
          {"nu", format_real(cfg.params.nu)},
          {"omega", format_real(cfg.params.omega)},
          {"eta", format_real(cfg.params.eta)},
          {"delta", format_real(cfg.params.delta)},
          {"epsilon", format_real(d.epsilon)},
          {"lambda", format_real(d.lambda)},
          {"Delta", format_real(d.delta_jcm)},
          {"beta_minus", format_real(d.beta_minus.real()) + "+" +
                             format_real(d.beta_minus.imag()) + "i"},
          {"dim", std::to_string(cfg.dim)},
          {"guard", std::to_string(cfg.guard)}};
}

std::vector<Cell> derived_cells(const DerivedParams& d) {
  return {d.epsilon, d.lambda, d.delta_jcm};
}

void append(std::vector<Cell>& row, const std::vector<Cell>& tail) {
  row.insert(row.end(), tail.begin(), tail.end());
}

Table evolve_table(const RunConfig& cfg) {
  const DerivedParams d = derive(cfg.params);
  const SpinBosonState psi0 = prepare_initial(cfg.params, cfg.dim, cfg.guard);
  const PropagationResult traj =
      cfg.pipeline == Pipeline::analytic
          ? AnalyticEvolver(cfg.params, cfg.dim).trajectory(psi0, cfg.times, cfg.guard)
          : ExactEvolver(cfg.params, cfg.dim, cfg.guard).trajectory(psi0, cfg.times);

  Table t;
  t.name = "evolve";
  t.meta = common_meta(cfg, "vibqubit-evolve/1");
  t.meta.emplace_back("pipeline", to_string(cfg.pipeline));
  t.columns = {"t", "P_e", "mean_n", "norm", "tail", "epsilon", "lambda", "Delta"};
  const CMatrix number = kron(spin::identity(), ladder(cfg.dim).number.matrix());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const SpinBosonState& s = traj.states[k];
    const double n2 = s.norm_squared();
    std::vector<Cell> row{traj.times[k], s.probability(Spin::excited) / n2,
                          s.expectation(number) / n2, traj.norms[k], traj.tail[k]};
    append(row, derived_cells(d));
    t.add_row(std::move(row));
  }
  return t;
}

Table qubit_table(const RunConfig& cfg) {
  const DerivedParams d = derive(cfg.params);
  const SpinBosonState psi0 = prepare_initial(cfg.params, cfg.dim, cfg.guard);
  std::optional<AnalyticEvolver> analytic;
  std::optional<ExactEvolver> exact;
  if (cfg.pipeline == Pipeline::analytic) analytic.emplace(cfg.params, cfg.dim);
  if (cfg.pipeline == Pipeline::exact) exact.emplace(cfg.params, cfg.dim, cfg.guard);
  const std::uint64_t seed = cfg.seed.value_or(1);

  Table t;
  t.name = "qubit";
  t.meta = common_meta(cfg, "vibqubit-qubit/1");
  t.meta.emplace_back("pipeline", to_string(cfg.pipeline));
  if (cfg.outcome == OutcomeChoice::sample) t.meta.emplace_back("seed", std::to_string(seed));
  t.columns = {"t",     "outcome", "P_outcome", "c0_sq",  "c1_sq", "leakage",
               "P_e",   "epsilon", "lambda",    "Delta",  "error"};
  const double nan = std::nan("");
  for (std::size_t k = 0; k < cfg.times.size(); ++k) {
    const double time = cfg.times[k];
    SpinBosonState state = cfg.pipeline == Pipeline::exact      ? exact->evolve(psi0, time)
                           : cfg.pipeline == Pipeline::analytic ? analytic->evolve(psi0, time)
                                                                : evolved_closed_form(cfg.params, time, cfg.dim);
    const double p_e = state.probability(Spin::excited) / state.norm_squared();
    std::vector<Cell> row;
    try {
      const MeasurementRecord m =
          cfg.outcome == OutcomeChoice::sample
              ? sample_measurement(state, seed + k)
              : conditional_measure(state, cfg.outcome == OutcomeChoice::excited ? Outcome::excited
                                                                                 : Outcome::ground);
      QubitAmplitudes q = cfg.pipeline == Pipeline::closed_form
                              ? qubit_closed_form(cfg.params, time, m.outcome)
                              : displace_to_qubit(m, cfg.params, time).qubit;
      // Pipeline amplitudes are normalized over the span; report populations
      // of the displaced state itself.
      const double span = 1.0 - q.leakage;
      row = {time, std::string(to_string(m.outcome)), m.probability, std::norm(q.c0) * span,
             std::norm(q.c1) * span, q.leakage, p_e};
      append(row, derived_cells(d));
      row.emplace_back(std::string());
    } catch (const ImpossibleOutcome& e) {
      row = {time, std::string("-"), nan, nan, nan, nan, p_e};
      append(row, derived_cells(d));
      row.emplace_back(std::string(e.what()));
    }
    t.add_row(std::move(row));
  }
  return t;
}

ModeState projected_branch(const SpinBosonState& s, Projection proj) {
  const CVector e = s.branch(Spin::excited);
  const CVector g = s.branch(Spin::ground);
  CVector v;
  switch (proj) {
    case Projection::excited: v = e; break;
    case Projection::ground: v = g; break;
    case Projection::plus: v = (e + g) / std::sqrt(2.0); break;
    case Projection::minus: v = (e - g) / std::sqrt(2.0); break;
  }
  if (v.norm() == 0.0) throw ImpossibleOutcome("cat: spin projection has zero probability");
  return ModeState(v / v.norm(), true);
}

const char* to_string(Projection p) {
  switch (p) {
    case Projection::excited: return "e";
    case Projection::ground: return "g";
    case Projection::plus: return "plus";
    case Projection::minus: return "minus";
  }
  return "?";
}

std::vector<Table> cat_tables(const RunConfig& cfg) {
  const DerivedParams d = derive(cfg.params);
  const CatState cat = cat_state(cfg.params, cfg.dim, cfg.guard);

  Table state;
  state.name = "cat_state";
  state.meta = common_meta(cfg, "vibqubit-cat-state/1");
  state.meta.emplace_back("t_cat", format_real(cat.t_cat));
  state.meta.emplace_back("alpha_1", format_real(d.alpha(1.0)));
  state.meta.emplace_back("norm", format_real(std::sqrt(cat.state.norm_squared())));
  state.columns = {"spin", "n", "re", "im", "epsilon", "lambda", "Delta"};
  for (Spin s : {Spin::excited, Spin::ground}) {
    const CVector b = cat.state.branch(s);
    for (int n = 0; n < cfg.dim; ++n) {
      std::vector<Cell> row{std::string(s == Spin::excited ? "e" : "g"),
                            static_cast<long long>(n), b[n].real(), b[n].imag()};
      append(row, derived_cells(d));
      state.add_row(std::move(row));
    }
  }

  const WignerGrid grid =
      wigner(projected_branch(cat.state, cfg.wigner_projection), cfg.wigner, cfg.guard);
  Table w;
  w.name = "wigner";
  w.meta = common_meta(cfg, "vibqubit-wigner/1");
  w.meta.emplace_back("coordinates", "x = Re(alpha), p = Im(alpha)");
  w.meta.emplace_back("spin_projection", to_string(cfg.wigner_projection));
  w.meta.emplace_back("t_cat", format_real(cat.t_cat));
  w.meta.emplace_back("integral", format_real(grid.integral()));
  w.meta.emplace_back("min", format_real(grid.values.minCoeff()));
  w.meta.emplace_back("max", format_real(grid.values.maxCoeff()));
  w.columns = {"x", "p", "W", "epsilon", "lambda", "Delta"};
  for (std::size_t i = 0; i < grid.x.size(); ++i) {
    for (std::size_t j = 0; j < grid.p.size(); ++j) {
      std::vector<Cell> row{grid.x[i], grid.p[j], grid.values(i, j)};
      append(row, derived_cells(d));
      w.add_row(std::move(row));
    }
  }
  return {std::move(state), std::move(w)};
}

Table scan_table(const RunConfig& cfg) {
  ScanConfig sc;
  sc.etas = cfg.scan_etas;
  sc.omegas = cfg.scan_omegas;
  sc.times = cfg.times;
  sc.nu = cfg.params.nu;
  sc.dim = cfg.dim;
  sc.guard = cfg.guard;
  sc.outcome = cfg.outcome == OutcomeChoice::ground ? Outcome::ground : Outcome::excited;
  sc.threads = cfg.threads;
  const std::vector<ScanRecord> records = regime_scan(sc);

  Table t;
  t.name = "scan";
  t.meta = {{"schema", "vibqubit-scan/1"},
            {"mode", "scan"},
            {"units", "times in 1/nu, frequencies in nu"},
            {"nu", format_real(cfg.params.nu)},
            {"dim", std::to_string(sc.dim)},
            {"dim_check", std::to_string(sc.dim + sc.convergence_step)},
            {"guard", std::to_string(sc.guard)},
            {"outcome", to_string(sc.outcome)}};
  t.columns = {"eta",       "omega",      "t",          "dim",          "epsilon",
               "lambda",    "Delta",      "beta_minus_abs", "infidelity", "infidelity_check",
               "converged", "leakage",    "P_e",        "tail",         "epsilon_warning",
               "error"};
  for (const ScanRecord& r : records) {
    t.add_row({r.eta, r.omega, r.time, static_cast<long long>(r.dim), r.epsilon, r.lambda,
               r.delta_jcm, r.beta_minus_abs, r.infidelity, r.infidelity_check, r.converged,
               r.leakage, r.p_excited, r.tail, r.epsilon_warning, r.error});
  }
  return t;
}

std::filesystem::path sibling_path(const std::filesystem::path& base, const std::string& name) {
  std::filesystem::path p = base;
  p.replace_filename(base.stem().string() + "_" + name + base.extension().string());
  return p;
}

void emit(const RunConfig& cfg, const std::vector<Table>& tables, std::ostream& stdout_sink) {
  if (cfg.format == Format::json) {
    if (cfg.output.empty()) {
      write_json(stdout_sink, tables);
      return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw Error("cannot open output file " + cfg.output);
    write_json(out, tables);
    return;
  }
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (cfg.output.empty()) {
      if (i) stdout_sink << '\n';
      write_csv(stdout_sink, tables[i]);
      continue;
    }
    const std::filesystem::path path =
        i == 0 ? std::filesystem::path(cfg.output) : sibling_path(cfg.output, tables[i].name);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file " + path.string());
    write_csv(out, tables[i]);
  }
}

}  // namespace

std::vector<Table> execute(const RunConfig& cfg) {
  switch (cfg.mode) {
    case Mode::evolve: return {evolve_table(cfg)};
    case Mode::qubit: return {qubit_table(cfg)};
    case Mode::cat: return cat_tables(cfg);
    case Mode::scan: return {scan_table(cfg)};
    case Mode::validate: {
      AcceptanceOptions opts;
      opts.seed = cfg.seed.value_or(1);
      opts.threads = cfg.threads;
      return {acceptance_table(run_acceptance(opts), opts.seed)};
    }
  }
  return {};
}

int run(const RunConfig& cfg, std::ostream& stdout_sink, std::ostream& diagnostics) {
  try {
    if (cfg.mode != Mode::validate && cfg.mode != Mode::scan && derive(cfg.params).epsilon_warning) {
      diagnostics << "warning: |epsilon| > " << kEpsilonWarning
                  << "; outside the small-rotation regime\n";
    }
    const std::vector<Table> tables = execute(cfg);
    emit(cfg, tables, stdout_sink);
    if (cfg.mode == Mode::validate) {
      int failed = 0;
      for (const auto& row : tables.front().rows) {
        const bool passed = std::get<bool>(row[2]);
        diagnostics << (passed ? "PASS" : "FAIL") << " criterion " << std::get<long long>(row[0])
                    << ": " << std::get<std::string>(row[1]) << '\n';
        failed += passed ? 0 : 1;
      }
      if (failed) {
        diagnostics << failed << " acceptance criteria failed\n";
        return kExitNumericalFailure;
      }
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    diagnostics << "config error: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const Error& e) {
    diagnostics << "numerical contract failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
}

}  // namespace vibq::cli

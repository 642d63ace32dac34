#include "vibqubit/protocols.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace vibq {

const char* to_string(Outcome o) { return o == Outcome::excited ? "e" : "g"; }

namespace {

void require_resonance(const IonParams& p, const char* where) {
  if (p.delta != 0.0) {
    throw UnsupportedDetuning(std::string(where) + ": requires delta = 0");
  }
}

// Bracketed amplitudes of the two branches in the closed-form solution.
struct BranchAmplitudes {
  cplx e0, e1;  // excited branch, before D(beta_minus)
  cplx g0, g1;  // ground branch, before D^dag(beta_minus)
};

BranchAmplitudes branch_amplitudes(const DerivedParams& d, double t) {
  const AlphaTerms at = sinc_alpha(1.0, d, t);
  const cplx free_phase = std::exp(-kI * (d.nu * t / 2.0));
  const cplx a = free_phase * (at.cos_term - kI * d.delta_jcm * at.sinc_term);
  const cplx b = std::exp(kI * (d.omega * t));
  // lambda sin(a1 t) / a1, well defined at a1 = 0 through the sinc limit.
  const cplx c = free_phase * d.lambda * at.sinc_term;
  return BranchAmplitudes{a + b, c, a - b, -c};
}

}  // namespace

SpinBosonState prepare_initial(const IonParams& params, int dim, int guard) {
  params.validate();
  const DerivedParams d = derive(params);
  return SpinBosonState::product(Spin::excited, coherent_state(d.beta_minus, dim, guard));
}

SpinBosonState evolved_closed_form(const IonParams& params, double t, int dim) {
  params.validate();
  require_resonance(params, "evolved_closed_form");
  const DerivedParams d = derive(params);
  const BranchAmplitudes amp = branch_amplitudes(d, t);
  const CMatrix disp = displacement(d.beta_minus, dim).matrix();
  CVector v(2 * dim);
  v.head(dim) = 0.5 * (amp.e0 * disp.col(0) + amp.e1 * disp.col(1));
  const CMatrix disp_back = disp.adjoint();
  v.tail(dim) = 0.5 * (amp.g0 * disp_back.col(0) + amp.g1 * disp_back.col(1));
  return SpinBosonState(std::move(v), dim);
}

MeasurementRecord conditional_measure(const SpinBosonState& state, Outcome outcome) {
  const double total = state.norm_squared();
  if (total == 0.0) throw ContractViolation("conditional_measure: zero state");
  const CVector branch = state.branch(spin_of(outcome));
  const double probability = branch.squaredNorm() / total;
  if (probability < kImpossibleProbability) {
    throw ImpossibleOutcome(std::string("conditional_measure: outcome ") + to_string(outcome) +
                            " has probability " + std::to_string(probability));
  }
  return MeasurementRecord{outcome, probability, ModeState(branch / branch.norm(), true),
                           std::nullopt};
}

MeasurementRecord sample_measurement(const SpinBosonState& state, std::uint64_t seed) {
  const double p_excited = state.probability(Spin::excited) / state.norm_squared();
  std::mt19937_64 rng(seed);
  // 53-bit uniform in [0, 1) built by hand; generate_canonical's rounding is
  // implementation-defined.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  MeasurementRecord rec =
      conditional_measure(state, u < p_excited ? Outcome::excited : Outcome::ground);
  rec.seed = seed;
  return rec;
}

DisplacedQubit displace_to_qubit(const MeasurementRecord& record, const IonParams& params,
                                 double time) {
  const DerivedParams d = derive(params);
  const cplx shift = record.outcome == Outcome::excited ? -d.beta_minus : d.beta_minus;
  const int dim = record.collapsed.dim();
  CVector displaced = displacement(shift, dim).matrix() * record.collapsed.amplitudes();
  const cplx r0 = displaced[0];
  const cplx r1 = displaced[1];
  const double span = std::norm(r0) + std::norm(r1);
  const double norm_const = std::sqrt(span);
  if (norm_const == 0.0) {
    throw ContractViolation("displace_to_qubit: no population in span{|0>, |1>}");
  }
  const double leakage = std::max(0.0, displaced.squaredNorm() - span);
  QubitAmplitudes q{r0 / norm_const, r1 / norm_const, norm_const, time,
                    Provenance::pipeline,  leakage};
  return DisplacedQubit{ModeState(std::move(displaced), true), q};
}

QubitAmplitudes qubit_closed_form(const IonParams& params, double t, Outcome outcome) {
  params.validate();
  require_resonance(params, "qubit_closed_form");
  const DerivedParams d = derive(params);
  const BranchAmplitudes amp = branch_amplitudes(d, t);
  const cplx r0 = outcome == Outcome::excited ? amp.e0 : amp.g0;
  const cplx r1 = outcome == Outcome::excited ? amp.e1 : amp.g1;
  const double norm_const = std::sqrt(std::norm(r0) + std::norm(r1));
  if (norm_const == 0.0) {
    throw ImpossibleOutcome(std::string("qubit_closed_form: branch ") + to_string(outcome) +
                            " vanishes at this time");
  }
  return QubitAmplitudes{r0 / norm_const, r1 / norm_const, norm_const, t,
                         Provenance::closed_form, 0.0};
}

CatState cat_state(const IonParams& params, int dim, int guard) {
  params.validate();
  require_resonance(params, "cat_state");
  const DerivedParams d = derive(params);
  const double alpha1 = d.alpha(1.0);
  if (alpha1 == 0.0) {
    throw DegenerateParameters("cat_state: alpha_1 = 0 (lambda = Delta = 0), no cat time");
  }
  const double t = std::numbers::pi / alpha1;
  // Branch phases as the closed-form solution gives them at sin(alpha_1 t) = 0.
  const cplx laser = std::exp(kI * (d.omega * t));
  const cplx free = std::exp(-kI * (d.nu * t / 2.0));
  const ModeState plus = coherent_state(d.beta_minus, dim, guard);
  const ModeState minus = coherent_state(-d.beta_minus, dim, guard);
  CVector v(2 * dim);
  v.head(dim) = 0.5 * (laser - free) * plus.amplitudes();
  v.tail(dim) = -0.5 * (laser + free) * minus.amplitudes();
  return CatState{SpinBosonState(std::move(v), dim, true), t};
}

}  // namespace vibq

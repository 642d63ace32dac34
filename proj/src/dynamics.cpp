#include "vibqubit/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vibq {

SpectralPropagator::SpectralPropagator(const SpinBosonOperator& hamiltonian)
    : mode_dim_(hamiltonian.mode_dim()), spectrum_(hamiltonian.matrix()) {}

SpinBosonOperator SpectralPropagator::at(double t) const {
  return SpinBosonOperator(spectrum_.apply([t](double w) { return std::exp(-kI * (w * t)); }),
                           mode_dim_);
}

SpinBosonState SpectralPropagator::apply(const SpinBosonState& state, double t) const {
  if (state.mode_dim() != mode_dim_) {
    throw InvalidDimension("SpectralPropagator: state dimension mismatch");
  }
  return SpinBosonState(
      spectrum_.apply_to([t](double w) { return std::exp(-kI * (w * t)); }, state.amplitudes()),
      mode_dim_);
}

SpinBosonOperator exact_propagator(const SpinBosonOperator& hamiltonian, double t) {
  return SpectralPropagator(hamiltonian).at(t);
}

AlphaTerms sinc_alpha(double n, const DerivedParams& d, double t) {
  const double alpha = d.alpha(n);
  if (alpha == 0.0) return AlphaTerms{1.0, t};
  return AlphaTerms{std::cos(alpha * t), std::sin(alpha * t) / alpha};
}

namespace {

// Per-level coefficients of the JCM propagator, before the free phase.
struct JcmBlocks {
  CVector u11;  // <e,n|U|e,n>
  CVector u22;  // <g,n|U|g,n>
  CVector u12;  // <e,n-1|U|g,n>, index n (entry 0 unused)
  CVector u21;  // <g,n+1|U|e,n>, index n (entry N-1 leaves the truncation)
  CVector phase_e;
  CVector phase_g;
};

JcmBlocks jcm_blocks(const DerivedParams& d, double t, int dim) {
  if (dim < 2) throw InvalidDimension("jcm_propagator: dim must be >= 2");
  JcmBlocks b{CVector(dim), CVector(dim), CVector::Zero(dim), CVector(dim),
              CVector(dim), CVector(dim)};
  const double delta = d.delta_jcm;
  for (int n = 0; n < dim; ++n) {
    const AlphaTerms upper = sinc_alpha(n + 1, d, t);
    const AlphaTerms lower = sinc_alpha(n, d, t);
    b.u11[n] = upper.cos_term - kI * delta * upper.sinc_term;
    b.u22[n] = lower.cos_term + kI * delta * lower.sinc_term;
    b.u21[n] = -d.lambda * std::sqrt(n + 1.0) * upper.sinc_term;
    if (n > 0) b.u12[n] = d.lambda * std::sqrt(static_cast<double>(n)) * lower.sinc_term;
    b.phase_e[n] = std::exp(-kI * t * (d.nu * n + d.nu / 2.0));
    b.phase_g[n] = std::exp(-kI * t * (d.nu * n - d.nu / 2.0));
  }
  return b;
}

}  // namespace

SpinBosonOperator jcm_propagator(const DerivedParams& d, double t, int dim) {
  const JcmBlocks b = jcm_blocks(d, t, dim);
  CMatrix u = CMatrix::Zero(2 * dim, 2 * dim);
  for (int n = 0; n < dim; ++n) {
    u(n, n) = b.phase_e[n] * b.u11[n];
    u(dim + n, dim + n) = b.phase_g[n] * b.u22[n];
    if (n > 0) u(n - 1, dim + n) = b.phase_e[n - 1] * b.u12[n];
    if (n + 1 < dim) u(dim + n + 1, n) = b.phase_g[n + 1] * b.u21[n];
  }
  return SpinBosonOperator(std::move(u), dim);
}

SpinBosonState apply_jcm_propagator(const DerivedParams& d, double t,
                                    const SpinBosonState& state) {
  const int dim = state.mode_dim();
  const JcmBlocks b = jcm_blocks(d, t, dim);
  const CVector& in = state.amplitudes();
  CVector out = CVector::Zero(2 * dim);
  for (int n = 0; n < dim; ++n) {
    cplx e = b.u11[n] * in[n];
    if (n + 1 < dim) e += b.u12[n + 1] * in[dim + n + 1];
    cplx g = b.u22[n] * in[dim + n];
    if (n > 0) g += b.u21[n - 1] * in[n - 1];
    out[n] = b.phase_e[n] * e;
    out[dim + n] = b.phase_g[n] * g;
  }
  return SpinBosonState(std::move(out), dim);
}

AnalyticEvolver::AnalyticEvolver(const IonParams& params, int dim)
    : dim_(dim), derived_(derive(params)) {
  params.validate();
  if (params.delta != 0.0) {
    throw UnsupportedDetuning("AnalyticEvolver: the analytic solution requires delta = 0");
  }
  transform_ = build_t(params, dim).matrix();
}

SpinBosonState AnalyticEvolver::evolve(const SpinBosonState& psi0, double t) const {
  if (psi0.mode_dim() != dim_) throw InvalidDimension("AnalyticEvolver: state dimension mismatch");
  const SpinBosonState rotated(transform_ * psi0.amplitudes(), dim_);
  const SpinBosonState evolved = apply_jcm_propagator(derived_, t, rotated);
  return SpinBosonState(transform_.adjoint() * evolved.amplitudes(), dim_);
}

PropagationResult AnalyticEvolver::trajectory(const SpinBosonState& psi0,
                                              const std::vector<double>& times,
                                              int guard) const {
  PropagationResult result;
  for (double t : times) {
    SpinBosonState s = evolve(psi0, t);
    result.times.push_back(t);
    result.norms.push_back(std::sqrt(s.norm_squared()));
    result.tail.push_back(s.tail(guard));
    result.states.push_back(std::move(s));
  }
  return result;
}

ExactEvolver::ExactEvolver(const IonParams& params, int dim, int guard, double tail_tolerance)
    : hamiltonian_(build_h_full(params, dim)),
      propagator_(hamiltonian_),
      guard_(guard),
      tail_tolerance_(tail_tolerance) {
  if (guard <= 0 || guard >= dim) throw InvalidDimension("ExactEvolver: guard must lie in (0, dim)");
}

SpinBosonState ExactEvolver::evolve(const SpinBosonState& psi0, double t) const {
  SpinBosonState s = propagator_.apply(psi0, t);
  const double tail = s.tail(guard_);
  if (tail > tail_tolerance_) {
    throw TruncationError("evolve_exact: guard-band population " + std::to_string(tail) +
                              " at t = " + std::to_string(t) + " exceeds tolerance",
                          t);
  }
  return s;
}

PropagationResult ExactEvolver::trajectory(const SpinBosonState& psi0,
                                           const std::vector<double>& times) const {
  PropagationResult result;
  for (double t : times) {
    SpinBosonState s = evolve(psi0, t);
    result.times.push_back(t);
    result.norms.push_back(std::sqrt(s.norm_squared()));
    result.tail.push_back(s.tail(guard_));
    result.states.push_back(std::move(s));
  }
  return result;
}

SpinBosonState evolve_analytic(const SpinBosonState& psi0, double t, const IonParams& params,
                               int dim) {
  return AnalyticEvolver(params, dim).evolve(psi0, t);
}

SpinBosonState evolve_exact(const SpinBosonState& psi0, double t, const IonParams& params,
                            int dim, int guard) {
  if (psi0.tail(guard) > kTailTol) {
    throw TruncationError("evolve_exact: initial guard-band population exceeds 1e-10", 0.0);
  }
  return ExactEvolver(params, dim, guard).evolve(psi0, t);
}

double fidelity(const SpinBosonState& s1, const SpinBosonState& s2) {
  if (s1.dim() != s2.dim()) throw InvalidDimension("fidelity: state dimensions differ");
  const double n1 = s1.norm_squared();
  const double n2 = s2.norm_squared();
  if (n1 == 0.0 || n2 == 0.0) throw ContractViolation("fidelity: zero state");
  const double f = std::norm(s1.amplitudes().dot(s2.amplitudes())) / (n1 * n2);
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace vibq

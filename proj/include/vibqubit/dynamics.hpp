#pragma once

// Time evolution: exact spectral propagation of any Hermitian spin-boson
// Hamiltonian, the closed-form Jaynes-Cummings propagator, and the analytic
// pipeline T^dag U T built from the closed-form transform.
// Times are in units of 1/nu.

#include <vector>

#include "vibqubit/transforms.hpp"

namespace vibq {

/// U(t) = V e^{-i w t} V^dag from one eigendecomposition, reusable for any t.
/// Immutable; concurrent read-only use is safe.
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const SpinBosonOperator& hamiltonian);

  int mode_dim() const { return mode_dim_; }
  SpinBosonOperator at(double t) const;
  SpinBosonState apply(const SpinBosonState& state, double t) const;
  const SpectralDecomposition& spectrum() const { return spectrum_; }

 private:
  int mode_dim_;
  SpectralDecomposition spectrum_;
};

SpinBosonOperator exact_propagator(const SpinBosonOperator& hamiltonian, double t);

struct AlphaTerms {
  double cos_term;   ///< cos(alpha_n t)
  double sinc_term;  ///< sin(alpha_n t) / alpha_n, equal to t when alpha_n = 0
};
AlphaTerms sinc_alpha(double n, const DerivedParams& d, double t);

/// e^{-it(nu n + nu sigma_z / 2)} (1/2[U11 + U22] I + 1/2[U11 - U22] sigma_z
/// + U21 sigma_- + U12 sigma_+), each block a function of n. Exact except for
/// the single coupling that leaves the truncation at n = N - 1.
SpinBosonOperator jcm_propagator(const DerivedParams& d, double t, int dim);

/// Matrix-free application of jcm_propagator, O(N).
SpinBosonState apply_jcm_propagator(const DerivedParams& d, double t,
                                    const SpinBosonState& state);

struct PropagationResult {
  std::vector<double> times;
  std::vector<SpinBosonState> states;
  std::vector<double> norms;
  std::vector<double> tail;
};

/// T^dag U(t) T with T the closed-form transform. No renormalization.
class AnalyticEvolver {
 public:
  AnalyticEvolver(const IonParams& params, int dim);

  const DerivedParams& derived() const { return derived_; }
  int mode_dim() const { return dim_; }
  /// |epsilon| beyond the first-order regime.
  bool regime_warning() const { return derived_.epsilon_warning; }

  SpinBosonState evolve(const SpinBosonState& psi0, double t) const;
  PropagationResult trajectory(const SpinBosonState& psi0, const std::vector<double>& times,
                               int guard = kDefaultGuard) const;

 private:
  int dim_;
  DerivedParams derived_;
  CMatrix transform_;
};

/// Spectral propagation of the full ion-laser Hamiltonian (any delta).
class ExactEvolver {
 public:
  ExactEvolver(const IonParams& params, int dim, int guard = kDefaultGuard,
               double tail_tolerance = kTailTol);

  int mode_dim() const { return propagator_.mode_dim(); }
  int guard() const { return guard_; }
  const SpinBosonOperator& hamiltonian() const { return hamiltonian_; }

  /// Throws TruncationError (carrying t) if the guard band is populated
  /// beyond the tolerance.
  SpinBosonState evolve(const SpinBosonState& psi0, double t) const;
  PropagationResult trajectory(const SpinBosonState& psi0,
                               const std::vector<double>& times) const;

 private:
  SpinBosonOperator hamiltonian_;
  SpectralPropagator propagator_;
  int guard_;
  double tail_tolerance_;
};

SpinBosonState evolve_analytic(const SpinBosonState& psi0, double t, const IonParams& params,
                               int dim);
SpinBosonState evolve_exact(const SpinBosonState& psi0, double t, const IonParams& params,
                            int dim, int guard = kDefaultGuard);

/// |<s1|s2>|^2 after renormalizing both.
double fidelity(const SpinBosonState& s1, const SpinBosonState& s2);

}  // namespace vibq

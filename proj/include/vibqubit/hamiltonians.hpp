#pragma once

// Physical parameters and the Hamiltonians of the laser-driven ion: the full
// ion-laser coupling, its linearised form, the small-rotation transformed form
// (exact and first order in epsilon) and the effective Jaynes-Cummings model.
// All frequencies are in units of nu by default (nu = 1).

#include "vibqubit/spin_boson.hpp"

namespace vibq {

struct IonParams {
  double nu = 1.0;     ///< vibrational angular frequency
  double omega = 0.0;  ///< laser Rabi frequency
  double eta = 0.0;    ///< Lamb-Dicke parameter
  double delta = 0.0;  ///< detuning omega_0 - omega_L

  /// Throws ContractViolation unless nu > 0, omega >= 0, eta >= 0.
  void validate() const;
};

/// |epsilon| above this leaves the first-order regime.
inline constexpr double kEpsilonWarning = 0.1;

struct DerivedParams {
  double nu;
  double omega;
  double eta;
  /// epsilon = -(eta / 2) nu / (nu + 2 omega)
  double epsilon;
  /// lambda = 2 eta nu omega / (nu + 2 omega)
  double lambda;
  /// Delta = omega - nu / 2
  double delta_jcm;
  /// beta_minus = i (eta / 2 - epsilon)
  cplx beta_minus;
  bool epsilon_warning;

  /// sqrt(Delta^2 + lambda^2 n)
  double alpha(double n) const;
};

DerivedParams derive(const IonParams& params);

/// nu n + (delta/2) sigma_z + omega (sigma_- e^{-i eta X} + sigma_+ e^{i eta X}),
/// X = a + a^dagger, with e^{i eta X} = D(i eta). The only builder that accepts
/// delta != 0.
SpinBosonOperator build_h_full(const IonParams& params, int dim);

/// nu n + omega sigma_z + i (eta nu / 2)(a - a^dagger) sigma_x + nu eta^2 / 4.
SpinBosonOperator build_h1(const IonParams& params, int dim);

/// Small-rotation transformed Hamiltonian with cos/sin[2 epsilon X] evaluated
/// as operator functions. Signs and constants follow the printed closed form;
/// it coincides with T2^dagger H1 T2 up to a multiple of the identity.
SpinBosonOperator build_h2_exact(const IonParams& params, int dim);

/// build_h2_exact with cos -> 1 and sin -> argument, constants dropped.
SpinBosonOperator build_h2_first_order(const IonParams& params, int dim);

/// nu n + omega sigma_z + i lambda (sigma_+ a - a^dagger sigma_-).
SpinBosonOperator build_h_jcm(const IonParams& params, int dim);

/// n + sigma_z / 2, conserved by the JCM.
CMatrix excitation_number(int dim);

/// Hilbert-Schmidt coefficients of H along a sigma_-, a sigma_+,
/// a^dag sigma_-, a^dag sigma_+ on the guarded subspace.
struct LadderCouplings {
  cplx a_sigma_minus;
  cplx a_sigma_plus;
  cplx adag_sigma_minus;
  cplx adag_sigma_plus;
};
LadderCouplings project_ladder_couplings(const SpinBosonOperator& h, int guard);

}  // namespace vibq

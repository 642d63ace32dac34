#pragma once

// The unitaries that map the full ion-laser Hamiltonian onto the effective
// Jaynes-Cummings model.

#include "vibqubit/hamiltonians.hpp"

namespace vibq {

/// (1/sqrt2)(1/2[D^dag + D] I + 1/2[D^dag - D] sigma_z - D^dag sigma_- + D sigma_+)
/// with D = D(beta). Assembled blockwise; unitary whenever D is.
SpinBosonOperator t1_shaped_transform(cplx beta, int dim);

/// Linearising transform, beta = i eta / 2.
SpinBosonOperator build_t1(const IonParams& params, int dim);

/// exp(-i epsilon (a + a^dag)(sigma_+ + sigma_-)) from the spectral exponential
/// of the Hermitian generator epsilon X sigma_x.
SpinBosonOperator build_t2(const IonParams& params, int dim);

/// Closed form of T = T2 T1: the T1 shape with beta_minus in place of beta.
SpinBosonOperator build_t(const IonParams& params, int dim);

/// H1 carried to the small-rotation frame by explicit conjugation,
/// T2^dagger H1 T2. This is the ordering that reproduces the printed closed
/// form of H2 and the counter-rotating cancellation for the chosen epsilon.
SpinBosonOperator h2_by_conjugation(const IonParams& params, int dim);

struct TransformSet {
  SpinBosonOperator t1;
  SpinBosonOperator t2;
  /// Closed form (T1 shape with beta_minus); used by the analytic pipeline.
  SpinBosonOperator t;
  /// Explicit product T2 T1; diagnostics only.
  SpinBosonOperator t_product;
  cplx beta;
  cplx beta_minus;
  double epsilon;
  /// |P (t_product - t) P|_F
  double closed_form_discrepancy;
};

TransformSet build_transforms(const IonParams& params, int dim, int guard = kDefaultGuard);

}  // namespace vibq

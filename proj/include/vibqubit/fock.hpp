#pragma once

// Truncated Fock-space linear algebra for a single bosonic mode.

#include <complex>
#include <type_traits>
#include <utility>

#include <Eigen/Dense>

#include "vibqubit/errors.hpp"

namespace vibq {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr int kDefaultGuard = 8;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kNormalizedTol = 1e-10;
inline constexpr double kTailTol = 1e-10;

/// max |M - M^dagger|
double hermiticity_residual(const CMatrix& m);

/// Eigendecomposition M = V diag(w) V^dagger of a Hermitian matrix. Every
/// operator function in the library (exp, cos, sin, propagators) goes
/// through this class. Read-only after construction, so one instance can be
/// shared between threads.
class SpectralDecomposition {
 public:
  explicit SpectralDecomposition(const CMatrix& hermitian);

  Eigen::Index size() const { return eigenvalues_.size(); }
  const RVector& eigenvalues() const { return eigenvalues_; }
  const CMatrix& eigenvectors() const { return eigenvectors_; }

  /// V f(w) V^dagger for f: double -> double or double -> complex.
  template <class F>
  CMatrix apply(F&& f) const {
    return eigenvectors_ * spectral_weights(std::forward<F>(f)).asDiagonal() *
           eigenvectors_.adjoint();
  }

  /// V f(w) V^dagger v, O(n^2).
  template <class F>
  CVector apply_to(F&& f, const CVector& v) const {
    CVector coeffs = eigenvectors_.adjoint() * v;
    coeffs.array() *= spectral_weights(std::forward<F>(f)).array();
    return eigenvectors_ * coeffs;
  }

 private:
  template <class F>
  CVector spectral_weights(F&& f) const {
    CVector weights(eigenvalues_.size());
    for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
      weights[i] = cplx(f(eigenvalues_[i]));
    }
    return weights;
  }

  RVector eigenvalues_;
  CMatrix eigenvectors_;
};

/// Dense N x N operator on the truncated vibrational Fock space.
class ModeOperator {
 public:
  /// Throws InvalidDimension unless square with dim >= 2, and
  /// ContractViolation if flagged Hermitian but not within kHermitianTol.
  explicit ModeOperator(CMatrix matrix, bool hermitian = false);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const CMatrix& matrix() const { return matrix_; }
  bool is_hermitian() const { return hermitian_; }
  ModeOperator adjoint() const;

 private:
  CMatrix matrix_;
  bool hermitian_;
};

/// Amplitude vector on the truncated Fock space.
class ModeState {
 public:
  /// A normalized flag is checked against kNormalizedTol.
  explicit ModeState(CVector amplitudes, bool normalized = false);

  static ModeState basis(int k, int dim);

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }
  cplx amplitude(int n) const { return amplitudes_[n]; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  bool is_normalized() const { return normalized_; }
  ModeState normalized() const;

 private:
  CVector amplitudes_;
  bool normalized_;
};

struct Ladder {
  ModeOperator annihilation;
  ModeOperator creation;
  ModeOperator number;
};

/// a[n-1, n] = sqrt(n), its adjoint, and the exactly diagonal number operator.
Ladder ladder(int dim);

/// Position-like quadrature a + a^dagger.
ModeOperator quadrature(int dim);

/// V f(w) V^dagger for a Hermitian operator. The result is flagged Hermitian
/// when f is real-valued.
template <class F>
ModeOperator hermitian_function(const ModeOperator& op, F&& f) {
  if (!op.is_hermitian()) {
    throw ContractViolation("hermitian_function: operator is not flagged Hermitian");
  }
  SpectralDecomposition spectrum(op.matrix());
  CMatrix result = spectrum.apply(std::forward<F>(f));
  if constexpr (std::is_floating_point_v<std::invoke_result_t<F, double>>) {
    CMatrix symmetric = 0.5 * (result + result.adjoint());
    return ModeOperator(std::move(symmetric), true);
  } else {
    return ModeOperator(std::move(result), false);
  }
}

/// D(beta) = exp(beta a^dagger - beta^* a), as the spectral exponential of the
/// Hermitian generator i(beta a^dagger - beta^* a). Exactly unitary on the
/// truncated space; agrees with the infinite-dimensional operator away from
/// the truncation edge.
ModeOperator displacement(cplx beta, int dim);

/// D(beta)|k>. Throws TruncationError if k lies in the guard band or the
/// result leaks more than kTailTol into it.
ModeState displaced_number_state(cplx beta, int k, int dim, int guard = kDefaultGuard);

inline ModeState coherent_state(cplx beta, int dim, int guard = kDefaultGuard) {
  return displaced_number_state(beta, 0, dim, guard);
}

/// Population in the top `guard` Fock levels.
double tail_mass(const ModeState& state, int guard);
double tail_mass(const CVector& amplitudes, int guard);

/// Fast displacements for many amplitudes at a fixed truncation. Uses
/// D(r e^{i theta}) = e^{i theta n} exp(r (a^dagger - a)) e^{-i theta n} with
/// a single cached decomposition of i(a^dagger - a), so each application is
/// O(N^2) instead of a fresh eigendecomposition.
class DisplacementFamily {
 public:
  explicit DisplacementFamily(int dim);

  int dim() const { return dim_; }
  CVector apply(cplx beta, const CVector& v) const;
  CMatrix matrix(cplx beta) const;

 private:
  int dim_;
  SpectralDecomposition momentum_;
};

}  // namespace vibq

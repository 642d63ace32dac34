#pragma once

// Operators and states on (two-level ion) x (truncated Fock space).
// Basis order is spin-major with |e> first: index = s * N + n, s = 0 for |e>,
// s = 1 for |g>. This convention holds everywhere in the library.

#include <vector>

#include "vibqubit/fock.hpp"

namespace vibq {

enum class Spin { excited = 0, ground = 1 };

using SpinMatrix = Eigen::Matrix2cd;

namespace spin {
SpinMatrix identity();
SpinMatrix sigma_z();
SpinMatrix sigma_x();
/// |e><g|
SpinMatrix sigma_plus();
/// |g><e|
SpinMatrix sigma_minus();
}  // namespace spin

/// spin (x) mode with the spin-major ordering above.
CMatrix kron(const SpinMatrix& spin_part, const CMatrix& mode_part);

class SpinBosonOperator {
 public:
  SpinBosonOperator(CMatrix matrix, int mode_dim, bool hermitian = false);

  static SpinBosonOperator from_blocks(const CMatrix& ee, const CMatrix& eg,
                                       const CMatrix& ge, const CMatrix& gg,
                                       bool hermitian = false);

  int mode_dim() const { return mode_dim_; }
  int dim() const { return 2 * mode_dim_; }
  const CMatrix& matrix() const { return matrix_; }
  bool is_hermitian() const { return hermitian_; }
  SpinBosonOperator adjoint() const;

  /// <row| . |col> spin block, an N x N mode operator.
  CMatrix block(Spin row, Spin col) const;

 private:
  CMatrix matrix_;
  int mode_dim_;
  bool hermitian_;
};

class SpinBosonState {
 public:
  SpinBosonState(CVector amplitudes, int mode_dim, bool normalized = false);

  /// |s> (x) mode
  static SpinBosonState product(Spin s, const ModeState& mode);

  int mode_dim() const { return mode_dim_; }
  int dim() const { return 2 * mode_dim_; }
  const CVector& amplitudes() const { return amplitudes_; }
  bool is_normalized() const { return normalized_; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

  /// Unnormalized mode amplitudes of one spin branch.
  CVector branch(Spin s) const;
  double probability(Spin s) const { return branch(s).squaredNorm(); }
  /// Guard-band population summed over both spin branches.
  double tail(int guard) const;
  double expectation(const CMatrix& op) const;

 private:
  CVector amplitudes_;
  int mode_dim_;
  bool normalized_;
};

/// Span of Fock levels n < N - guard in each of `blocks` copies of the mode
/// (blocks = 1 for mode operators, 2 for spin-boson operators).
class GuardedSubspace {
 public:
  GuardedSubspace(int mode_dim, int guard, int blocks);

  int size() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }

  /// P M P restricted to the kept indices.
  CMatrix compress(const CMatrix& m) const;
  /// Frobenius norm of P M P.
  double norm(const CMatrix& m) const;
  /// Frobenius norm of M P (columns restricted only).
  double column_norm(const CMatrix& m) const;

 private:
  int dim_;
  std::vector<int> indices_;
};

/// Difference of two operators on the guarded subspace modulo a multiple of
/// the identity: constant = tr(P(A-B)P) / dim P, residual = |P(A-B)P - c P|_F.
struct IdentityFit {
  double residual;
  cplx constant;
};
IdentityFit compare_modulo_identity(const CMatrix& a, const CMatrix& b,
                                    const GuardedSubspace& subspace);

/// max(|(U^dag U - I) P|_F, |(U U^dag - I) P|_F)
double unitarity_defect(const CMatrix& u, const GuardedSubspace& subspace);

}  // namespace vibq

#include "vibqubit/spin_boson.hpp"

#include <cmath>
#include <string>

namespace vibq {

namespace spin {

SpinMatrix identity() { return SpinMatrix::Identity(); }

SpinMatrix sigma_z() {
  SpinMatrix m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

SpinMatrix sigma_x() { return sigma_plus() + sigma_minus(); }

SpinMatrix sigma_plus() {
  SpinMatrix m = SpinMatrix::Zero();
  m(0, 1) = 1.0;
  return m;
}

SpinMatrix sigma_minus() {
  SpinMatrix m = SpinMatrix::Zero();
  m(1, 0) = 1.0;
  return m;
}

}  // namespace spin

CMatrix kron(const SpinMatrix& spin_part, const CMatrix& mode_part) {
  const auto n = mode_part.rows();
  CMatrix out(2 * n, 2 * n);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.block(r * n, c * n, n, n) = spin_part(r, c) * mode_part;
    }
  }
  return out;
}

SpinBosonOperator::SpinBosonOperator(CMatrix matrix, int mode_dim, bool hermitian)
    : matrix_(std::move(matrix)), mode_dim_(mode_dim), hermitian_(hermitian) {
  if (mode_dim_ < 2) throw InvalidDimension("SpinBosonOperator: mode dim must be >= 2");
  if (matrix_.rows() != 2 * mode_dim_ || matrix_.cols() != 2 * mode_dim_) {
    throw InvalidDimension("SpinBosonOperator: matrix must be 2N x 2N");
  }
  if (hermitian_ && hermiticity_residual(matrix_) > kHermitianTol) {
    throw ContractViolation("SpinBosonOperator: flagged Hermitian but residual exceeds 1e-12");
  }
}

SpinBosonOperator SpinBosonOperator::from_blocks(const CMatrix& ee, const CMatrix& eg,
                                                 const CMatrix& ge, const CMatrix& gg,
                                                 bool hermitian) {
  const auto n = ee.rows();
  CMatrix m(2 * n, 2 * n);
  m << ee, eg, ge, gg;
  return SpinBosonOperator(std::move(m), static_cast<int>(n), hermitian);
}

SpinBosonOperator SpinBosonOperator::adjoint() const {
  return SpinBosonOperator(matrix_.adjoint(), mode_dim_, hermitian_);
}

CMatrix SpinBosonOperator::block(Spin row, Spin col) const {
  const int n = mode_dim_;
  return matrix_.block(static_cast<int>(row) * n, static_cast<int>(col) * n, n, n);
}

SpinBosonState::SpinBosonState(CVector amplitudes, int mode_dim, bool normalized)
    : amplitudes_(std::move(amplitudes)), mode_dim_(mode_dim), normalized_(normalized) {
  if (mode_dim_ < 2) throw InvalidDimension("SpinBosonState: mode dim must be >= 2");
  if (amplitudes_.size() != 2 * mode_dim_) {
    throw InvalidDimension("SpinBosonState: amplitude vector must have length 2N");
  }
  if (normalized_ && std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-9) {
    throw ContractViolation("SpinBosonState: flagged normalized but |norm^2 - 1| > 1e-9");
  }
}

SpinBosonState SpinBosonState::product(Spin s, const ModeState& mode) {
  const int n = mode.dim();
  CVector v = CVector::Zero(2 * n);
  v.segment(static_cast<int>(s) * n, n) = mode.amplitudes();
  return SpinBosonState(std::move(v), n, mode.is_normalized());
}

CVector SpinBosonState::branch(Spin s) const {
  return amplitudes_.segment(static_cast<int>(s) * mode_dim_, mode_dim_);
}

double SpinBosonState::tail(int guard) const {
  return tail_mass(branch(Spin::excited), guard) + tail_mass(branch(Spin::ground), guard);
}

double SpinBosonState::expectation(const CMatrix& op) const {
  return amplitudes_.dot(op * amplitudes_).real();
}

GuardedSubspace::GuardedSubspace(int mode_dim, int guard, int blocks)
    : dim_(mode_dim * blocks) {
  if (guard <= 0 || guard >= mode_dim) {
    throw InvalidDimension("GuardedSubspace: guard must lie in (0, N), got " +
                           std::to_string(guard));
  }
  for (int b = 0; b < blocks; ++b) {
    for (int n = 0; n < mode_dim - guard; ++n) indices_.push_back(b * mode_dim + n);
  }
}

CMatrix GuardedSubspace::compress(const CMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw InvalidDimension("GuardedSubspace: operator size mismatch");
  }
  return m(indices_, indices_);
}

double GuardedSubspace::norm(const CMatrix& m) const { return compress(m).norm(); }

double GuardedSubspace::column_norm(const CMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw InvalidDimension("GuardedSubspace: operator size mismatch");
  }
  return m(Eigen::all, indices_).norm();
}

IdentityFit compare_modulo_identity(const CMatrix& a, const CMatrix& b,
                                    const GuardedSubspace& subspace) {
  CMatrix diff = subspace.compress(a - b);
  const cplx constant = diff.trace() / static_cast<double>(subspace.size());
  diff.diagonal().array() -= constant;
  return IdentityFit{diff.norm(), constant};
}

double unitarity_defect(const CMatrix& u, const GuardedSubspace& subspace) {
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return std::max(subspace.column_norm(u.adjoint() * u - id),
                  subspace.column_norm(u * u.adjoint() - id));
}

}  // namespace vibq

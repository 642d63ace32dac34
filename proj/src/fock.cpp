#include "vibqubit/fock.hpp"

#include <cmath>
#include <string>

namespace vibq {

namespace {

void require_dim(int dim, const char* where) {
  if (dim < 2) {
    throw InvalidDimension(std::string(where) + ": dim must be >= 2, got " +
                           std::to_string(dim));
  }
}

}  // namespace

double hermiticity_residual(const CMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

SpectralDecomposition::SpectralDecomposition(const CMatrix& hermitian) {
  if (hermitian.rows() != hermitian.cols() || hermitian.rows() == 0) {
    throw InvalidDimension("SpectralDecomposition: matrix must be square and nonempty");
  }
  const double residual = hermiticity_residual(hermitian);
  if (residual > kHermitianTol) {
    throw ContractViolation("SpectralDecomposition: matrix is not Hermitian (residual " +
                            std::to_string(residual) + ")");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("SpectralDecomposition: eigensolver did not converge");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

ModeOperator::ModeOperator(CMatrix matrix, bool hermitian)
    : matrix_(std::move(matrix)), hermitian_(hermitian) {
  if (matrix_.rows() != matrix_.cols()) {
    throw InvalidDimension("ModeOperator: matrix is not square");
  }
  require_dim(static_cast<int>(matrix_.rows()), "ModeOperator");
  if (hermitian_ && hermiticity_residual(matrix_) > kHermitianTol) {
    throw ContractViolation("ModeOperator: flagged Hermitian but residual exceeds 1e-12");
  }
}

ModeOperator ModeOperator::adjoint() const {
  return ModeOperator(matrix_.adjoint(), hermitian_);
}

ModeState::ModeState(CVector amplitudes, bool normalized)
    : amplitudes_(std::move(amplitudes)), normalized_(normalized) {
  require_dim(static_cast<int>(amplitudes_.size()), "ModeState");
  if (normalized_ && std::abs(amplitudes_.squaredNorm() - 1.0) > kNormalizedTol) {
    throw ContractViolation("ModeState: flagged normalized but |norm^2 - 1| > 1e-10");
  }
}

ModeState ModeState::basis(int k, int dim) {
  require_dim(dim, "ModeState::basis");
  if (k < 0 || k >= dim) {
    throw InvalidDimension("ModeState::basis: level " + std::to_string(k) +
                           " outside truncation " + std::to_string(dim));
  }
  CVector v = CVector::Zero(dim);
  v[k] = 1.0;
  return ModeState(std::move(v), true);
}

ModeState ModeState::normalized() const {
  const double norm = amplitudes_.norm();
  if (norm == 0.0) throw ContractViolation("ModeState: cannot normalize the zero vector");
  return ModeState(amplitudes_ / norm, true);
}

Ladder ladder(int dim) {
  require_dim(dim, "ladder");
  CMatrix a = CMatrix::Zero(dim, dim);
  CMatrix n = CMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  CMatrix ad = a.adjoint();
  return Ladder{ModeOperator(std::move(a)), ModeOperator(std::move(ad)),
                ModeOperator(std::move(n), true)};
}

ModeOperator quadrature(int dim) {
  const Ladder l = ladder(dim);
  return ModeOperator(l.annihilation.matrix() + l.creation.matrix(), true);
}

ModeOperator displacement(cplx beta, int dim) {
  const Ladder l = ladder(dim);
  // exp(beta a^dag - beta^* a) = exp(-i G) with G = i(beta a^dag - beta^* a).
  CMatrix generator =
      kI * (beta * l.creation.matrix() - std::conj(beta) * l.annihilation.matrix());
  generator = 0.5 * (generator + generator.adjoint());
  SpectralDecomposition spectrum(generator);
  return ModeOperator(spectrum.apply([](double w) { return std::exp(-kI * w); }));
}

ModeState displaced_number_state(cplx beta, int k, int dim, int guard) {
  require_dim(dim, "displaced_number_state");
  if (guard <= 0 || guard >= dim) {
    throw InvalidDimension("displaced_number_state: guard must lie in (0, dim)");
  }
  if (k < 0 || k > dim - guard) {
    throw TruncationError("displaced_number_state: level " + std::to_string(k) +
                          " is inside the guard band of truncation " + std::to_string(dim));
  }
  CVector v = displacement(beta, dim).matrix().col(k);
  const double tail = tail_mass(v, guard);
  if (tail > kTailTol) {
    throw TruncationError("displaced_number_state: guard-band population " +
                          std::to_string(tail) + " exceeds 1e-10; increase dim");
  }
  return ModeState(std::move(v), true);
}

double tail_mass(const CVector& amplitudes, int guard) {
  const auto dim = amplitudes.size();
  if (guard <= 0 || guard >= dim) {
    throw InvalidDimension("tail_mass: guard must lie in (0, dim)");
  }
  return amplitudes.tail(guard).squaredNorm();
}

double tail_mass(const ModeState& state, int guard) {
  return tail_mass(state.amplitudes(), guard);
}

namespace {

CMatrix momentum_generator(int dim) {
  require_dim(dim, "DisplacementFamily");
  const Ladder l = ladder(dim);
  CMatrix p = kI * (l.creation.matrix() - l.annihilation.matrix());
  return 0.5 * (p + p.adjoint());
}

}  // namespace

DisplacementFamily::DisplacementFamily(int dim)
    : dim_(dim), momentum_(momentum_generator(dim)) {}

CVector DisplacementFamily::apply(cplx beta, const CVector& v) const {
  if (v.size() != dim_) throw InvalidDimension("DisplacementFamily::apply: size mismatch");
  const double r = std::abs(beta);
  const double theta = std::arg(beta);
  CVector w(dim_);
  for (int n = 0; n < dim_; ++n) w[n] = std::exp(-kI * (theta * n)) * v[n];
  w = momentum_.apply_to([r](double p) { return std::exp(-kI * (r * p)); }, w);
  for (int n = 0; n < dim_; ++n) w[n] *= std::exp(kI * (theta * n));
  return w;
}

CMatrix DisplacementFamily::matrix(cplx beta) const {
  CMatrix m(dim_, dim_);
  for (int k = 0; k < dim_; ++k) m.col(k) = apply(beta, CVector::Unit(dim_, k));
  return m;
}

}  // namespace vibq

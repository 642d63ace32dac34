#include "vibqubit/hamiltonians.hpp"

#include <cmath>
#include <string>

namespace vibq {

void IonParams::validate() const {
  if (!(nu > 0.0)) throw ContractViolation("IonParams: nu must be > 0");
  if (!(omega >= 0.0)) throw ContractViolation("IonParams: omega must be >= 0");
  if (!(eta >= 0.0)) throw ContractViolation("IonParams: eta must be >= 0");
  if (!std::isfinite(delta)) throw ContractViolation("IonParams: delta must be finite");
}

double DerivedParams::alpha(double n) const {
  return std::sqrt(delta_jcm * delta_jcm + lambda * lambda * n);
}

DerivedParams derive(const IonParams& p) {
  if (!(p.nu > 0.0)) throw ContractViolation("derive: nu must be > 0");
  const double denom = p.nu + 2.0 * p.omega;
  if (!(denom > 0.0)) throw ContractViolation("derive: nu + 2 omega must be > 0");

  DerivedParams d{};
  d.nu = p.nu;
  d.omega = p.omega;
  d.eta = p.eta;
  d.epsilon = -(p.eta / 2.0) * p.nu / denom;
  d.lambda = 2.0 * p.eta * p.nu * p.omega / denom;
  d.delta_jcm = p.omega - p.nu / 2.0;
  d.beta_minus = kI * (p.eta / 2.0 - d.epsilon);
  d.epsilon_warning = std::abs(d.epsilon) > kEpsilonWarning;
  return d;
}

namespace {

void require_resonance(const IonParams& p, const char* where) {
  if (p.delta != 0.0) {
    throw UnsupportedDetuning(std::string(where) +
                              ": transformed Hamiltonians require delta = 0, got " +
                              std::to_string(p.delta));
  }
}

SpinBosonOperator hermitian_result(CMatrix m, int dim) {
  // Sums of kron products of Hermitian pieces; symmetrize away rounding.
  CMatrix symmetric = 0.5 * (m + m.adjoint());
  return SpinBosonOperator(std::move(symmetric), dim, true);
}

enum class H2Order { exact, first_order };

SpinBosonOperator build_h2(const IonParams& p, int dim, H2Order order) {
  p.validate();
  require_resonance(p, "build_h2");
  const DerivedParams d = derive(p);
  const Ladder l = ladder(dim);
  const CMatrix& a = l.annihilation.matrix();
  const CMatrix& ad = l.creation.matrix();
  const CMatrix& n = l.number.matrix();
  const ModeOperator x = quadrature(dim);
  const double eps = d.epsilon;

  CMatrix cos_term;
  CMatrix sin_term;
  if (order == H2Order::exact) {
    ModeOperator arg(2.0 * eps * x.matrix(), true);
    cos_term = hermitian_function(arg, [](double w) { return std::cos(w); }).matrix();
    sin_term = hermitian_function(arg, [](double w) { return std::sin(w); }).matrix();
  } else {
    cos_term = CMatrix::Identity(dim, dim);
    sin_term = 2.0 * eps * x.matrix();
  }

  const CMatrix id2n = CMatrix::Identity(2 * dim, 2 * dim);
  const CMatrix drift = kron(spin::sigma_x(), a - ad);
  CMatrix h = p.nu * (kron(spin::identity(), n) + kI * eps * drift) +
              p.omega * (kron(spin::sigma_z(), cos_term) +
                         kI * kron(spin::sigma_minus() - spin::sigma_plus(), sin_term)) +
              kI * (p.eta * p.nu / 2.0) * drift;
  if (order == H2Order::exact) {
    // Printed constants, kept verbatim; comparisons are modulo identity.
    h += (p.nu * eps * eps + p.nu * eps * p.eta * p.eta / 4.0) * id2n;
  }
  return hermitian_result(std::move(h), dim);
}

}  // namespace

SpinBosonOperator build_h_full(const IonParams& p, int dim) {
  p.validate();
  const Ladder l = ladder(dim);
  // e^{i eta X} = D(i eta), e^{-i eta X} = its adjoint.
  const CMatrix forward = displacement(kI * p.eta, dim).matrix();
  CMatrix h = p.nu * kron(spin::identity(), l.number.matrix()) +
              (p.delta / 2.0) * kron(spin::sigma_z(), CMatrix::Identity(dim, dim)) +
              p.omega * (kron(spin::sigma_minus(), forward.adjoint()) +
                         kron(spin::sigma_plus(), forward));
  return hermitian_result(std::move(h), dim);
}

SpinBosonOperator build_h1(const IonParams& p, int dim) {
  p.validate();
  require_resonance(p, "build_h1");
  const Ladder l = ladder(dim);
  const CMatrix& a = l.annihilation.matrix();
  const CMatrix& ad = l.creation.matrix();
  CMatrix h = p.nu * kron(spin::identity(), l.number.matrix()) +
              p.omega * kron(spin::sigma_z(), CMatrix::Identity(dim, dim)) +
              kI * (p.eta * p.nu / 2.0) * kron(spin::sigma_x(), a - ad) +
              (p.nu * p.eta * p.eta / 4.0) * CMatrix::Identity(2 * dim, 2 * dim);
  return hermitian_result(std::move(h), dim);
}

SpinBosonOperator build_h2_exact(const IonParams& p, int dim) {
  return build_h2(p, dim, H2Order::exact);
}

SpinBosonOperator build_h2_first_order(const IonParams& p, int dim) {
  return build_h2(p, dim, H2Order::first_order);
}

SpinBosonOperator build_h_jcm(const IonParams& p, int dim) {
  p.validate();
  require_resonance(p, "build_h_jcm");
  const DerivedParams d = derive(p);
  const Ladder l = ladder(dim);
  CMatrix h = p.nu * kron(spin::identity(), l.number.matrix()) +
              p.omega * kron(spin::sigma_z(), CMatrix::Identity(dim, dim)) +
              kI * d.lambda *
                  (kron(spin::sigma_plus(), l.annihilation.matrix()) -
                   kron(spin::sigma_minus(), l.creation.matrix()));
  return hermitian_result(std::move(h), dim);
}

CMatrix excitation_number(int dim) {
  const Ladder l = ladder(dim);
  return kron(spin::identity(), l.number.matrix()) +
         0.5 * kron(spin::sigma_z(), CMatrix::Identity(dim, dim));
}

LadderCouplings project_ladder_couplings(const SpinBosonOperator& h, int guard) {
  const int dim = h.mode_dim();
  const GuardedSubspace sub(dim, guard, 2);
  const Ladder l = ladder(dim);
  const CMatrix hp = sub.compress(h.matrix());
  auto coefficient = [&](const SpinMatrix& s, const CMatrix& mode) {
    const CMatrix basis = sub.compress(kron(s, mode));
    // <B, H> / <B, B> with <A, B> = tr(A^dag B)
    return (basis.adjoint() * hp).trace() / (basis.adjoint() * basis).trace();
  };
  const CMatrix& a = l.annihilation.matrix();
  const CMatrix& ad = l.creation.matrix();
  return LadderCouplings{coefficient(spin::sigma_minus(), a),
                         coefficient(spin::sigma_plus(), a),
                         coefficient(spin::sigma_minus(), ad),
                         coefficient(spin::sigma_plus(), ad)};
}

}  // namespace vibq

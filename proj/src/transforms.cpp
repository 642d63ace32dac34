#include "vibqubit/transforms.hpp"

#include <cmath>

namespace vibq {

SpinBosonOperator t1_shaped_transform(cplx beta, int dim) {
  const CMatrix d = displacement(beta, dim).matrix();
  const CMatrix dd = d.adjoint();
  CMatrix t = 0.5 * kron(spin::identity(), dd + d) + 0.5 * kron(spin::sigma_z(), dd - d) -
              kron(spin::sigma_minus(), dd) + kron(spin::sigma_plus(), d);
  t /= std::sqrt(2.0);
  return SpinBosonOperator(std::move(t), dim);
}

SpinBosonOperator build_t1(const IonParams& params, int dim) {
  params.validate();
  return t1_shaped_transform(kI * (params.eta / 2.0), dim);
}

SpinBosonOperator build_t2(const IonParams& params, int dim) {
  params.validate();
  const DerivedParams d = derive(params);
  const ModeOperator x = quadrature(dim);
  CMatrix generator = d.epsilon * kron(spin::sigma_x(), x.matrix());
  generator = 0.5 * (generator + generator.adjoint());
  const SpectralDecomposition spectrum(generator);
  return SpinBosonOperator(spectrum.apply([](double w) { return std::exp(-kI * w); }), dim);
}

SpinBosonOperator build_t(const IonParams& params, int dim) {
  params.validate();
  return t1_shaped_transform(derive(params).beta_minus, dim);
}

SpinBosonOperator h2_by_conjugation(const IonParams& params, int dim) {
  const CMatrix t2 = build_t2(params, dim).matrix();
  const CMatrix h1 = build_h1(params, dim).matrix();
  return SpinBosonOperator(t2.adjoint() * h1 * t2, dim);
}

TransformSet build_transforms(const IonParams& params, int dim, int guard) {
  params.validate();
  const DerivedParams d = derive(params);
  SpinBosonOperator t1 = build_t1(params, dim);
  SpinBosonOperator t2 = build_t2(params, dim);
  SpinBosonOperator t = t1_shaped_transform(d.beta_minus, dim);
  SpinBosonOperator product(t2.matrix() * t1.matrix(), dim);
  const GuardedSubspace sub(dim, guard, 2);
  const double discrepancy = sub.norm(product.matrix() - t.matrix());
  return TransformSet{std::move(t1),
                      std::move(t2),
                      std::move(t),
                      std::move(product),
                      kI * (params.eta / 2.0),
                      d.beta_minus,
                      d.epsilon,
                      discrepancy};
}

}  // namespace vibq

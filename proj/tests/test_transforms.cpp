#include "doctest.h"
#include "oracles.hpp"
#include "vibqubit/transforms.hpp"

using namespace vibq;

TEST_CASE("T1 linearises the full Hamiltonian") {
  for (double eta : {0.05, 0.2, 0.5}) {
    const IonParams p{1.0, 2.0, eta, 0.0};
    const int dim = 96;
    const GuardedSubspace sub(dim, 24, 2);
    const CMatrix t1 = build_t1(p, dim).matrix();
    CHECK(unitarity_defect(t1, sub) <= 1e-9);
    const CMatrix lin = t1 * build_h_full(p, dim).matrix() * t1.adjoint();
    CHECK(sub.norm(lin - build_h1(p, dim).matrix()) <= 1e-8);
  }
}

TEST_CASE("T2 is the series exponential of its generator") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 32;
  const double eps = derive(p).epsilon;
  const CMatrix a = oracle::annihilation(dim);
  const CMatrix gen = eps * kron(spin::sigma_x(), a + a.adjoint());
  CHECK((build_t2(p, dim).matrix() - oracle::series_exp(-kI * gen)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("T2 shifts the annihilation operator") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 64;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  const double eps = derive(p).epsilon;
  const CMatrix t2 = build_t2(p, dim).matrix();
  const CMatrix a = kron(spin::identity(), oracle::annihilation(dim));
  const CMatrix shifted = a + kI * eps * kron(spin::sigma_x(), CMatrix::Identity(dim, dim));
  CHECK(sub.norm(t2 * a * t2.adjoint() - shifted) <= 1e-10);
  CHECK(sub.norm(t2.adjoint() * a * t2 - (2.0 * a - shifted)) <= 1e-10);
}

TEST_CASE("conjugated H1 matches the printed H2 up to a constant") {
  for (double eta : {0.1, 0.2, 0.3}) {
    const IonParams p{1.0, 2.0, eta, 0.0};
    const int dim = 96;
    const GuardedSubspace sub(dim, kDefaultGuard, 2);
    const IdentityFit fit = compare_modulo_identity(h2_by_conjugation(p, dim).matrix(),
                                                    build_h2_exact(p, dim).matrix(), sub);
    CHECK(fit.residual <= 1e-8);
    CHECK(std::abs(fit.constant.imag()) <= 1e-12);
    // the offset is eta nu eps + nu eta^2 / 4 - nu eps eta^2 / 4 with eps < 0
    const double e = derive(p).epsilon;
    CHECK(fit.constant.real() == doctest::Approx(eta * e + eta * eta / 4.0 - e * eta * eta / 4.0)
                                     .epsilon(1e-8));
  }
}

TEST_CASE("the opposite conjugation order does not reproduce H2") {
  const IonParams p{1.0, 2.0, 0.2, 0.0};
  const int dim = 64;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  const CMatrix t2 = build_t2(p, dim).matrix();
  const CMatrix other = t2 * build_h1(p, dim).matrix() * t2.adjoint();
  CHECK(compare_modulo_identity(other, build_h2_exact(p, dim).matrix(), sub).residual > 1e-2);
}

TEST_CASE("first-order truncation error is quadratic in epsilon") {
  const int dim = 96;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  auto residual = [&](double eta) {
    const IonParams p{1.0, 2.0, eta, 0.0};
    return compare_modulo_identity(h2_by_conjugation(p, dim).matrix(),
                                   build_h2_first_order(p, dim).matrix(), sub)
        .residual;
  };
  const double r1 = residual(0.2);
  const double r2 = residual(0.1);
  const double r3 = residual(0.05);
  CHECK(r1 / r2 >= 3.5);
  CHECK(r1 / r2 <= 4.5);
  CHECK(r2 / r3 >= 3.5);
  CHECK(r2 / r3 <= 4.5);
}

TEST_CASE("closed-form T equals T2 T1") {
  for (double eta : {0.05, 0.3, 0.5}) {
    for (double omega : {0.5, 2.0}) {
      const IonParams p{1.0, omega, eta, 0.0};
      const int dim = 64;
      const TransformSet ts = build_transforms(p, dim);
      CHECK(ts.closed_form_discrepancy <= 1e-10);
      CHECK(ts.beta == cplx(0.0, eta / 2.0));
      CHECK(ts.beta_minus.imag() == doctest::Approx(eta / 2.0 - ts.epsilon));
      const GuardedSubspace sub(dim, kDefaultGuard, 2);
      CHECK(unitarity_defect(ts.t.matrix(), sub) <= 1e-9);
    }
  }
}

TEST_CASE("T2 dagger T1 is the T1 shape at i(eta/2 + eps)") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 64;
  const GuardedSubspace sub(dim, kDefaultGuard, 2);
  const double eps = derive(p).epsilon;
  const CMatrix other = build_t2(p, dim).matrix().adjoint() * build_t1(p, dim).matrix();
  CHECK(sub.norm(other - t1_shaped_transform(kI * (0.15 + eps), dim).matrix()) <= 1e-10);
}

TEST_CASE("eta = 0 reduces T to the Hadamard-like spin rotation") {
  const int dim = 16;
  const CMatrix t = build_t({1.0, 2.0, 0.0, 0.0}, dim).matrix();
  Eigen::Matrix2cd h;
  h << 1.0, 1.0, -1.0, 1.0;
  h /= std::sqrt(2.0);
  CHECK((t - kron(h, CMatrix::Identity(dim, dim))).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((build_t2({1.0, 2.0, 0.0, 0.0}, dim).matrix() - CMatrix::Identity(2 * dim, 2 * dim))
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
}

#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "vibqubit/dynamics.hpp"
#include "vibqubit/protocols.hpp"

using namespace vibq;

namespace {

// Scalar qubit amplitudes for the excited outcome, written out from the
// JCM solution: (A + e^{i Omega t}) |0> + c |1>, normalized.
std::pair<cplx, cplx> excited_qubit_oracle(double eta, double omega, double t) {
  const double nu = 1.0;
  const double lambda = 2.0 * eta * nu * omega / (nu + 2.0 * omega);
  const double delta = omega - nu / 2.0;
  const double a1 = std::sqrt(delta * delta + lambda * lambda);
  const cplx phase = std::exp(-kI * (nu * t / 2.0));
  const cplx a = phase * (std::cos(a1 * t) - kI * (delta / a1) * std::sin(a1 * t));
  const cplx c0 = a + std::exp(kI * (omega * t));
  const cplx c1 = (lambda / a1) * phase * std::sin(a1 * t);
  const double n = std::sqrt(std::norm(c0) + std::norm(c1));
  return {c0 / n, c1 / n};
}

}  // namespace

TEST_CASE("initial state") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 64;
  const SpinBosonState psi0 = prepare_initial(p, dim);
  CHECK(psi0.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(psi0.probability(Spin::excited) == doctest::Approx(1.0).epsilon(1e-12));
  const CVector e = psi0.branch(Spin::excited);
  CHECK(std::abs(e[0] - std::exp(-0.18 * 0.18 / 2.0)) <= 1e-12);
  CHECK(std::abs(e[1] - kI * 0.18 * std::exp(-0.18 * 0.18 / 2.0)) <= 1e-12);
}

TEST_CASE("closed-form evolution agrees with the analytic pipeline") {
  for (double eta : {0.05, 0.3}) {
    for (double omega : {0.5, 2.0, 4.0}) {
      const IonParams p{1.0, omega, eta, 0.0};
      const int dim = 64;
      const AnalyticEvolver ev(p, dim);
      const SpinBosonState psi0 = prepare_initial(p, dim);
      for (double t : {0.0, 1.0, 5.0, 10.0}) {
        const SpinBosonState closed = evolved_closed_form(p, t, dim);
        CHECK(1.0 - fidelity(closed, ev.evolve(psi0, t)) <= 1e-8);
        CHECK((closed.amplitudes() - ev.evolve(psi0, t).amplitudes()).norm() <= 1e-8);
        CHECK(std::abs(closed.probability(Spin::excited) + closed.probability(Spin::ground) - 1.0) <=
              1e-10);
      }
    }
  }
}

TEST_CASE("conditional measurement") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 64;
  const SpinBosonState psi0 = prepare_initial(p, dim);
  CHECK_THROWS_AS(conditional_measure(psi0, Outcome::ground), ImpossibleOutcome);
  const MeasurementRecord e0 = conditional_measure(psi0, Outcome::excited);
  CHECK(e0.probability == doctest::Approx(1.0));
  CHECK_FALSE(e0.seed.has_value());

  const SpinBosonState s = evolved_closed_form(p, 5.0, dim);
  const MeasurementRecord me = conditional_measure(s, Outcome::excited);
  const MeasurementRecord mg = conditional_measure(s, Outcome::ground);
  CHECK(me.probability + mg.probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(me.collapsed.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((me.collapsed.amplitudes() - s.branch(Spin::excited) / std::sqrt(me.probability)).norm() <=
        1e-12);
}

TEST_CASE("sampled measurement") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 48;
  const SpinBosonState s = evolved_closed_form(p, 5.0, dim);
  const double pe = s.probability(Spin::excited);

  const MeasurementRecord r1 = sample_measurement(s, 42);
  const MeasurementRecord r2 = sample_measurement(s, 42);
  CHECK(r1.outcome == r2.outcome);
  CHECK(r1.seed == std::optional<std::uint64_t>(42));

  int excited = 0;
  const int trials = 2000;
  for (int seed = 0; seed < trials; ++seed) {
    excited += sample_measurement(s, static_cast<std::uint64_t>(seed)).outcome == Outcome::excited;
  }
  const double sigma = std::sqrt(pe * (1.0 - pe) / trials);
  CHECK(std::abs(excited / static_cast<double>(trials) - pe) <= 5.0 * sigma);

  // a certain outcome is always drawn
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    CHECK(sample_measurement(prepare_initial(p, dim), seed).outcome == Outcome::excited);
  }
}

TEST_CASE("displaced qubit matches the scalar closed form") {
  for (double eta : {0.1, 0.3}) {
    const IonParams p{1.0, 2.0, eta, 0.0};
    const int dim = 64;
    for (double t : {1.0, 4.0, 7.5}) {
      const SpinBosonState s = evolved_closed_form(p, t, dim);
      const DisplacedQubit dq = displace_to_qubit(conditional_measure(s, Outcome::excited), p, t);
      CHECK(dq.qubit.leakage <= 1e-10);
      CHECK(dq.qubit.provenance == Provenance::pipeline);
      const auto [c0, c1] = excited_qubit_oracle(eta, 2.0, t);
      const QubitAmplitudes cf = qubit_closed_form(p, t, Outcome::excited);
      CHECK(cf.provenance == Provenance::closed_form);
      CHECK(cf.leakage == 0.0);
      CHECK(std::abs(cf.c0 - c0) <= 1e-12);
      CHECK(std::abs(cf.c1 - c1) <= 1e-12);
      // pipeline amplitudes agree up to a global phase
      CHECK(std::abs(std::abs(std::conj(dq.qubit.c0) * c0 + std::conj(dq.qubit.c1) * c1) - 1.0) <= 1e-10);

      const DisplacedQubit dg = displace_to_qubit(conditional_measure(s, Outcome::ground), p, t);
      const QubitAmplitudes cg = qubit_closed_form(p, t, Outcome::ground);
      CHECK(dg.qubit.leakage <= 1e-10);
      CHECK(std::abs(std::abs(std::conj(dg.qubit.c0) * cg.c0 + std::conj(dg.qubit.c1) * cg.c1) - 1.0) <=
            1e-10);
    }
  }
}

TEST_CASE("ground outcome at t = 0 is impossible in closed form") {
  CHECK_THROWS_AS(qubit_closed_form({1.0, 2.0, 0.3, 0.0}, 0.0, Outcome::ground), ImpossibleOutcome);
}

TEST_CASE("the |1> component vanishes at multiples of pi / alpha_1") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const double a1 = derive(p).alpha(1);
  for (int k = 1; k <= 3; ++k) {
    const double t = k * std::numbers::pi / a1;
    CHECK(std::abs(qubit_closed_form(p, t).c1) <= 1e-14);
    const auto [c0, c1] = excited_qubit_oracle(0.3, 2.0, t);
    CHECK(std::abs(c1) <= 1e-14);
  }
  CHECK(std::abs(qubit_closed_form(p, 0.5 * std::numbers::pi / a1).c1) > 1e-2);
}

TEST_CASE("exact-pipeline leakage shrinks with eta") {
  double previous = 1.0;
  for (double eta : {0.3, 0.15, 0.075}) {
    const IonParams p{1.0, 2.0, eta, 0.0};
    const int dim = 64;
    const SpinBosonState s = evolve_exact(prepare_initial(p, dim), 5.0, p, dim);
    CHECK(std::abs(s.probability(Spin::excited) + s.probability(Spin::ground) - 1.0) <= 1e-10);
    const double leak = displace_to_qubit(conditional_measure(s, Outcome::excited), p, 5.0).qubit.leakage;
    CHECK(leak < previous);
    CHECK(leak > 0.0);
    previous = leak;
  }
}

TEST_CASE("cat state") {
  const IonParams p{1.0, 2.0, 0.3, 0.0};
  const int dim = 64;
  const CatState cat = cat_state(p, dim);
  CHECK(cat.t_cat == doctest::Approx(std::numbers::pi / std::sqrt(2.25 + 0.0576)).epsilon(1e-12));
  CHECK(cat.t_cat == doctest::Approx(2.06809).epsilon(1e-5));
  CHECK(cat.state.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(1.0 - fidelity(cat.state, evolved_closed_form(p, cat.t_cat, dim)) <= 1e-12);

  // branches are the coherent states |beta_minus> and |-beta_minus>
  const cplx b = derive(p).beta_minus;
  const CVector e = cat.state.branch(Spin::excited);
  const CVector g = cat.state.branch(Spin::ground);
  CHECK(std::abs(std::abs(coherent_state(b, dim).amplitudes().dot(e)) - e.norm()) <= 1e-12);
  CHECK(std::abs(std::abs(coherent_state(-b, dim).amplitudes().dot(g)) - g.norm()) <= 1e-12);

  CHECK_THROWS_AS(cat_state({1.0, 0.5, 0.0, 0.0}, dim), DegenerateParameters);
}

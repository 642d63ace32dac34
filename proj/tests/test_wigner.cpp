#include <numbers>

#include "doctest.h"
#include "vibqubit/config.hpp"
#include "vibqubit/protocols.hpp"
#include "vibqubit/wigner.hpp"

using namespace vibq;
using namespace vibq::cli;

namespace {

std::pair<int, int> argmax(const WignerGrid& w) {
  Eigen::Index i = 0, j = 0;
  w.values.maxCoeff(&i, &j);
  return {static_cast<int>(i), static_cast<int>(j)};
}

}  // namespace

TEST_CASE("grid layout") {
  const WignerGrid w = wigner(ModeState::basis(0, 32), {2.0, 5});
  REQUIRE(w.x.size() == 5);
  REQUIRE(w.p.size() == 5);
  CHECK(w.x.front() == -2.0);
  CHECK(w.x[2] == 0.0);
  CHECK(w.p.back() == 2.0);
  CHECK(w.values.rows() == 5);
  CHECK(w.values.cols() == 5);
}

TEST_CASE("vacuum") {
  const WignerGrid w = wigner(ModeState::basis(0, 32), {4.0, 81});
  CHECK(w.values(40, 40) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-12));
  // Gaussian (2/pi) exp(-2|alpha|^2); index 45 is x = 0.5
  CHECK(w.values(45, 40) == doctest::Approx(2.0 / std::numbers::pi * std::exp(-0.5)).epsilon(1e-10));
  CHECK(std::abs(w.values(0, 0)) <= 1e-12);
  CHECK(w.integral() == doctest::Approx(1.0).epsilon(0.02));
  CHECK(w.values.minCoeff() >= -1e-12);
}

TEST_CASE("single-phonon state is negative at the origin") {
  const WignerGrid w = wigner(ModeState::basis(1, 32), {3.0, 61});
  CHECK(w.values(30, 30) == doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-12));
  CHECK(w.integral() == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("coherent state peaks at its amplitude") {
  const WignerSpec spec{1.0, 101};  // spacing 0.02
  const WignerGrid w = wigner(coherent_state(cplx(0.0, 0.18), 48), spec);
  const auto [i, j] = argmax(w);
  CHECK(w.x[i] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.p[j] == doctest::Approx(0.18).epsilon(1e-9));
  CHECK(w.values(i, j) == doctest::Approx(2.0 / std::numbers::pi).epsilon(0.01));
}

TEST_CASE("cat branches interfere") {
  const int dim = 64;
  const CVector even = coherent_state(cplx(0.0, 2.0), dim).amplitudes() +
                       coherent_state(cplx(0.0, -2.0), dim).amplitudes();
  const WignerGrid w = wigner(ModeState(even).normalized(), {4.0, 81});
  CHECK(w.values.minCoeff() < -0.1);
  CHECK(w.integral() == doctest::Approx(1.0).epsilon(0.02));

  const CatState cat = cat_state({1.0, 20.0, 2.0, 0.0}, dim);
  const CVector plus = (cat.state.branch(Spin::excited) + cat.state.branch(Spin::ground)) / std::sqrt(2.0);
  const WignerGrid wc = wigner(ModeState(plus).normalized(), {4.0, 81});
  CHECK(wc.values.minCoeff() < 0.0);
}

TEST_CASE("populated guard band is rejected") {
  CHECK_THROWS_AS(wigner(ModeState::basis(31, 32), {2.0, 5}), TruncationError);
  CHECK_THROWS_AS(wigner(ModeState::basis(0, 32), {2.0, 1}), ContractViolation);
  CHECK_THROWS_AS(wigner(ModeState::basis(0, 32), {100.0, 5}), ContractViolation);
}

#pragma once

// State-preparation protocols: the displaced initial state, its closed-form
// evolution, conditional spin measurement followed by a corrective
// displacement (vibrational qubit), and the cat state at alpha_1 t = pi.

#include <cstdint>
#include <optional>

#include "vibqubit/dynamics.hpp"

namespace vibq {

enum class Outcome { excited, ground };

inline Spin spin_of(Outcome o) { return o == Outcome::excited ? Spin::excited : Spin::ground; }
const char* to_string(Outcome o);

/// Requested outcomes below this probability are rejected.
inline constexpr double kImpossibleProbability = 1e-14;

/// |e> (x) |beta_minus>
SpinBosonState prepare_initial(const IonParams& params, int dim, int guard = kDefaultGuard);

/// Explicit two-branch solution for the initial state above:
/// 1/2 D(b)([A + e^{i Omega t}]|0> + c|1>)|e> + 1/2 D^dag(b)([A - e^{i Omega t}]|0> - c|1>)|g>
/// with A = e^{-i nu t/2}(cos a1 t - i Delta/a1 sin a1 t), c = lambda/a1 e^{-i nu t/2} sin a1 t.
SpinBosonState evolved_closed_form(const IonParams& params, double t, int dim);

struct MeasurementRecord {
  Outcome outcome;
  double probability;
  ModeState collapsed;
  std::optional<std::uint64_t> seed;
};

/// Ideal projective measurement of the spin with a caller-chosen outcome.
MeasurementRecord conditional_measure(const SpinBosonState& state, Outcome outcome);

/// Draws the outcome from the Born probabilities with a seeded generator.
MeasurementRecord sample_measurement(const SpinBosonState& state, std::uint64_t seed);

enum class Provenance { closed_form, pipeline };

/// Qubit amplitudes in the bare {|0>, |1>} basis, normalized over that span.
/// norm_const divides the raw amplitudes; leakage is the displaced-state
/// population outside the span (zero for the closed form).
struct QubitAmplitudes {
  cplx c0;
  cplx c1;
  double norm_const;
  double time;
  Provenance provenance;
  double leakage;
};

struct DisplacedQubit {
  ModeState state;
  QubitAmplitudes qubit;
};

/// D(-beta_minus) after an |e> outcome, D(beta_minus) after |g>.
DisplacedQubit displace_to_qubit(const MeasurementRecord& record, const IonParams& params,
                                 double time = 0.0);

/// Scalar evaluation of the qubit amplitudes (no Fock space). The excited
/// outcome is the worked case; the ground outcome uses the second branch.
QubitAmplitudes qubit_closed_form(const IonParams& params, double t,
                                  Outcome outcome = Outcome::excited);

struct CatState {
  SpinBosonState state;
  double t_cat;
};

/// t_cat = pi / alpha_1 and
/// 1/2[(e^{i Omega t} - e^{-i nu t/2})|b>|e> - (e^{i Omega t} + e^{-i nu t/2})|-b>|g>].
CatState cat_state(const IonParams& params, int dim, int guard = kDefaultGuard);

}  // namespace vibq

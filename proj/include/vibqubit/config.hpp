#pragma once

// Flat JSON run configuration. The schema is documented in docs/config.md.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vibqubit/hamiltonians.hpp"

namespace vibq::cli {

enum class Mode { evolve, qubit, cat, scan, validate };
enum class Format { csv, json };
enum class Pipeline { exact, analytic, closed_form };
enum class OutcomeChoice { excited, ground, sample };
enum class Projection { excited, ground, plus, minus };

const char* to_string(Mode m);
std::optional<Mode> mode_from_string(std::string_view s);

struct WignerSpec {
  double extent = 4.0;  ///< grid covers [-extent, extent] in Re(alpha) and Im(alpha)
  int points = 81;      ///< per axis
};

struct RunConfig {
  Mode mode = Mode::validate;
  IonParams params{1.0, 2.0, 0.3, 0.0};
  std::vector<double> times;
  int dim = 64;
  int guard = kDefaultGuard;
  std::optional<std::uint64_t> seed;
  std::string output;  ///< empty = stdout
  Format format = Format::csv;
  Pipeline pipeline = Pipeline::exact;
  OutcomeChoice outcome = OutcomeChoice::excited;
  std::vector<double> scan_etas;
  std::vector<double> scan_omegas;
  unsigned threads = 0;
  WignerSpec wigner;
  Projection wigner_projection = Projection::plus;
};

/// Parses and validates a flat JSON object. Throws ConfigError naming the
/// offending key; never returns a partially valid config.
RunConfig parse_config(std::string_view text);

}  // namespace vibq::cli

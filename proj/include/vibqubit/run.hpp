#pragma once

#include <iosfwd>
#include <vector>

#include "vibqubit/config.hpp"
#include "vibqubit/report.hpp"

namespace vibq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitNumericalFailure = 2;

/// Runs the configured mode and returns its tables without touching files.
/// Throws vibq::Error on numerical-contract failures.
std::vector<Table> execute(const RunConfig& config);

/// execute() plus emission to config.output (stdout when empty). Returns
/// kExitOk, or kExitNumericalFailure when a contract or acceptance criterion
/// fails; the reason is written to `diagnostics`.
int run(const RunConfig& config, std::ostream& stdout_sink, std::ostream& diagnostics);

}  // namespace vibq::cli

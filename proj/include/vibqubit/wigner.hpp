#pragma once

#include <vector>

#include "vibqubit/config.hpp"
#include "vibqubit/fock.hpp"

namespace vibq::cli {

/// W(alpha) = (2/pi) sum_n (-1)^n |<n|D^dag(alpha)|psi>|^2 on a square grid
/// with x = Re(alpha), p = Im(alpha). In these coordinates the vacuum peaks at
/// 2/pi and W integrates to 1 over d(Re alpha) d(Im alpha); |beta> peaks at
/// (Re beta, Im beta).
struct WignerGrid {
  std::vector<double> x;
  std::vector<double> p;
  Eigen::MatrixXd values;  ///< values(i, j) = W(x[i] + i p[j])

  /// Riemann sum over the grid.
  double integral() const;
};

/// Throws TruncationError when the state's guard-band population exceeds 1e-8.
/// The state is zero-padded internally so the grid corners stay accurate.
WignerGrid wigner(const ModeState& state, const WignerSpec& spec, int guard = kDefaultGuard);

}  // namespace vibq::cli

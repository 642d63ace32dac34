#include "vibqubit/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vibq::cli {

namespace {
constexpr int kMaxWorkingDim = 2048;
}  // namespace

double WignerGrid::integral() const {
  if (x.size() < 2 || p.size() < 2) return 0.0;
  const double cell = (x[1] - x[0]) * (p[1] - p[0]);
  return values.sum() * cell;
}

WignerGrid wigner(const ModeState& state, const WignerSpec& spec, int guard) {
  const double tail = tail_mass(state, guard);
  if (tail > 1e-8) {
    throw TruncationError("wigner: guard-band population " + std::to_string(tail) +
                          " exceeds 1e-8");
  }
  if (spec.points < 2) throw ContractViolation("wigner: need at least 2 points per axis");

  WignerGrid grid;
  const int m = spec.points;
  for (int k = 0; k < m; ++k) {
    const double v = -spec.extent + 2.0 * spec.extent * k / (m - 1);
    grid.x.push_back(v);
    grid.p.push_back(v);
  }
  grid.values.resize(m, m);

  // Displacing by up to |alpha| pushes population to n ~ (|alpha| + sqrt(n))^2,
  // so the state is zero-padded into a working space large enough for the
  // grid corners.
  const double reach = spec.extent * std::numbers::sqrt2 + 6.0;
  const int dim = state.dim() + static_cast<int>(std::ceil(reach * reach));
  if (dim > kMaxWorkingDim) {
    throw ContractViolation("wigner: extent " + std::to_string(spec.extent) +
                            " needs a working dimension above " + std::to_string(kMaxWorkingDim));
  }
  CVector padded = CVector::Zero(dim);
  padded.head(state.dim()) = state.amplitudes();
  const DisplacementFamily family(dim);
  RVector parity(dim);
  for (int n = 0; n < dim; ++n) parity[n] = (n % 2 == 0) ? 1.0 : -1.0;

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const cplx alpha(grid.x[i], grid.p[j]);
      const CVector shifted = family.apply(-alpha, padded);
      grid.values(i, j) =
          (2.0 / std::numbers::pi) * (shifted.cwiseAbs2().array() * parity.array()).sum();
    }
  }
  return grid;
}

}  // namespace vibq::cli

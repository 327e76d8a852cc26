#pragma once

#include "qwerner/types.hpp"

namespace qwerner {

struct MinimizationResult {
  double delta = 0.0;      // minimized discord, bits
  double theta_opt = 0.0;  // argmin in [0, pi/4]
  int evaluations = 0;
  bool converged = false;
};

// delta = min over theta in [0, pi/4] of discord(params, parity, a, theta).
// The domain is symmetry-reduced: discord is pi/2-periodic and symmetric
// about pi/4. Coarse 46-point grid, then golden-section refinement of the
// best bracket until the objective interval is <= 1e-10 bits. Ties within
// 1e-12 report the smallest theta. Throws NoConvergence after 200
// evaluations.
MinimizationResult minimize_discord(const CoherentParams& params, Parity parity, double a);

// minimize_discord(...).delta - entanglement_of_formation(...).
double delta_minus_eof(const CoherentParams& params, Parity parity, double a);

}  // namespace qwerner

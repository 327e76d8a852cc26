#include "qwerner/minimizer.hpp"

#include <cmath>
#include <numbers>

#include "qwerner/closed_form.hpp"
#include "qwerner/errors.hpp"

namespace qwerner {

namespace {

constexpr int kGridPoints = 46;
constexpr int kMaxEvaluations = 200;
constexpr double kValueTolerance = 1e-10;
constexpr double kTieTolerance = 1e-12;

}  // namespace

MinimizationResult minimize_discord(const CoherentParams& params, Parity parity, double a) {
  const double quarter_pi = std::numbers::pi / 4.0;

  MinimizationResult result;
  double best_value = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;

  auto objective = [&](double theta) {
    if (result.evaluations >= kMaxEvaluations)
      throw NoConvergence("discord minimization exceeded 200 evaluations");
    ++result.evaluations;
    const double value = discord(params, parity, a, theta);
    if (value < best_value - kTieTolerance) {
      best_value = value;
      best_theta = theta;
    } else if (value <= best_value + kTieTolerance && theta < best_theta) {
      best_value = std::min(best_value, value);
      best_theta = theta;
    }
    return value;
  };

  // Coarse scan of the symmetry-reduced domain [0, pi/4].
  int best_index = 0;
  double best_grid_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGridPoints; ++i) {
    const double theta = quarter_pi * i / (kGridPoints - 1);
    const double value = objective(theta);
    if (value < best_grid_value) {
      best_grid_value = value;
      best_index = i;
    }
  }

  // Golden-section refinement of the bracket around the best grid point.
  // Convergence is on the objective value; flat objectives terminate
  // immediately and theta stays at the smallest minimizer seen.
  double lo = quarter_pi * std::max(best_index - 1, 0) / (kGridPoints - 1);
  double hi = quarter_pi * std::min(best_index + 1, kGridPoints - 1) / (kGridPoints - 1);

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo);
  double x2 = lo + invphi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (std::abs(f1 - f2) > kValueTolerance && hi - lo > 1e-14) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = objective(x2);
    }
  }

  result.delta = best_value;
  result.theta_opt = best_theta;
  result.converged = true;
  return result;
}

double delta_minus_eof(const CoherentParams& params, Parity parity, double a) {
  return minimize_discord(params, parity, a).delta - entanglement_of_formation(params, parity, a);
}

}  // namespace qwerner

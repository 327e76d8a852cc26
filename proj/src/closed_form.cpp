#include "qwerner/closed_form.hpp"

#include <algorithm>
#include <cmath>

#include "qwerner/errors.hpp"
#include "qwerner/scs_states.hpp"

namespace qwerner {

namespace {

void check_mixing(double a) {
  if (!(std::isfinite(a) && a >= 0.0 && a <= 1.0))
    throw MixingOutOfRange("mixing parameter a must lie in [0, 1]");
}

void check_theta(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("theta must be finite");
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Binary Shannon entropy in bits; 0 log 0 = 0 at both endpoints.
double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return -xlog2x(p) - xlog2x(1.0 - p) + 0.0;  // +0.0 normalizes -0
}

// The two nonzero expansion coefficients of the parity's pure state, in
// basis order: h1^2 = n^2 / (4 (N_s^a)^2 (N_t^b)^2) with (s,t) = (+,+) for
// Plus and (+,-) for Minus; h2 the complementary pair. The corner coupling
// of the density matrix is h1*h2.
struct PairWeights {
  double h1 = 0.0;
  double h2 = 0.0;
};

PairWeights pair_weights(const CoherentParams& params, Parity parity) {
  const PureSCS psi = pure_scs_vector(params, parity);
  return PairWeights{psi.first(), psi.second()};
}

double joint_entropy(double a) {
  return -3.0 * xlog2x((1.0 - a) / 4.0) - xlog2x((1.0 + 3.0 * a) / 4.0) + 0.0;
}

double reduced_entropy(double lambda1, double lambda2) {
  return -xlog2x(lambda1) - xlog2x(lambda2) + 0.0;
}

// Sum_j P_j H2((1-a)/(4 P_j)); branches with P_j <= 1e-14 contribute 0.
double conditional_entropy_from(const OutcomePair& p, double a) {
  double total = 0.0;
  for (double pj : {p.p1, p.p2}) {
    if (pj <= 1e-14) continue;
    total += pj * binary_entropy((1.0 - a) / (4.0 * pj));
  }
  return total;
}

double discord_from(const OutcomePair& probs, double lambda1, double lambda2, double a) {
  return reduced_entropy(lambda1, lambda2) - joint_entropy(a) +
         conditional_entropy_from(probs, a);
}

}  // namespace

JointSpectrum joint_eigenvalues(double a) {
  check_mixing(a);
  const double small = (1.0 - a) / 4.0;
  return JointSpectrum{(1.0 + 3.0 * a) / 4.0, small, small, small};
}

std::pair<double, double> reduced_eigenvalues(const CoherentParams& params, Parity parity,
                                              double a) {
  check_mixing(a);
  const PairWeights w = pair_weights(params, parity);
  return {(1.0 - a) / 2.0 + a * w.h1 * w.h1, (1.0 - a) / 2.0 + a * w.h2 * w.h2};
}

OutcomePair outcome_probabilities(const CoherentParams& params, Parity parity, double a,
                                  double theta) {
  check_mixing(a);
  check_theta(theta);
  const PairWeights w = pair_weights(params, parity);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);
  return OutcomePair{(1.0 - a) / 2.0 + a * (w.h1 * w.h1 * c2 + w.h2 * w.h2 * s2),
                     (1.0 - a) / 2.0 + a * (w.h1 * w.h1 * s2 + w.h2 * w.h2 * c2)};
}

double conditional_entropy(const CoherentParams& params, Parity parity, double a, double theta) {
  return conditional_entropy_from(outcome_probabilities(params, parity, a, theta), a);
}

double discord(const CoherentParams& params, Parity parity, double a, double theta) {
  const auto [lambda1, lambda2] = reduced_eigenvalues(params, parity, a);
  const OutcomePair probs = outcome_probabilities(params, parity, a, theta);
  return discord_from(probs, lambda1, lambda2, a);
}

double mutual_information(const CoherentParams& params, Parity parity, double a) {
  const auto [lambda1, lambda2] = reduced_eigenvalues(params, parity, a);
  return 2.0 * reduced_entropy(lambda1, lambda2) - joint_entropy(a);
}

std::array<double, 4> sqrt_eigenvalues_rho_rhotilde(const CoherentParams& params, Parity parity,
                                                    double a) {
  check_mixing(a);
  const PairWeights w = pair_weights(params, parity);
  const double d1 = (1.0 - a) / 4.0 + a * w.h1 * w.h1;
  const double d2 = (1.0 - a) / 4.0 + a * w.h2 * w.h2;
  const double corner = a * w.h1 * w.h2;
  const double root = std::sqrt(d1 * d2);

  std::array<double, 4> out{root + corner, (1.0 - a) / 4.0, (1.0 - a) / 4.0,
                            std::max(root - corner, 0.0)};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double concurrence_mixed(const CoherentParams& params, Parity parity, double a) {
  const std::array<double, 4> s = sqrt_eigenvalues_rho_rhotilde(params, parity, a);
  const double sum = s[0] + s[1] + s[2] + s[3];
  return std::clamp(2.0 * s[0] - sum, 0.0, 1.0);
}

double entanglement_of_formation(const CoherentParams& params, Parity parity, double a) {
  const double c = concurrence_mixed(params, parity, a);
  return binary_entropy((1.0 + std::sqrt(std::max(1.0 - c * c, 0.0))) / 2.0);
}

WernerMeasures werner_limit_measures(double a, double theta) {
  check_mixing(a);
  check_theta(theta);
  // Both expansion weights are 1/2 in the limit, so P1 = P2 = 1/2 for every
  // theta and the reduced state is maximally mixed.
  const OutcomePair probs{0.5, 0.5};
  const double d = discord_from(probs, 0.5, 0.5, a);
  const double c = std::max(0.0, (3.0 * a - 1.0) / 2.0);
  const double eof = binary_entropy((1.0 + std::sqrt(std::max(1.0 - c * c, 0.0))) / 2.0);
  return WernerMeasures{d, eof};
}

OutcomePair minus_outcome_probabilities_printed(const CoherentParams& params, double a,
                                                double theta) {
  check_mixing(a);
  check_theta(theta);
  const PairWeights w = pair_weights(params, Parity::Minus);
  const double c2 = std::cos(theta) * std::cos(theta);
  const double s2 = std::sin(theta) * std::sin(theta);

  // P2 as published carries n+^2 where the state's own n-^2 belongs; the
  // two constants differ by (1 - x_a^2 x_b^2)/(1 + x_a^2 x_b^2).
  const double xa2 = std::exp(-2.0 * params.alpha_sq);
  const double xb2 = std::exp(-2.0 * params.beta_sq);
  const double n_ratio_sq = (1.0 - xa2 * xb2) / (1.0 + xa2 * xb2);

  return OutcomePair{
      (1.0 - a) / 2.0 + a * (w.h1 * w.h1 * c2 + w.h2 * w.h2 * s2),
      (1.0 - a) / 2.0 + a * n_ratio_sq * (w.h2 * w.h2 * c2 + w.h1 * w.h1 * s2)};
}

double minus_discord_printed(const CoherentParams& params, double a, double theta) {
  const auto [lambda1, lambda2] = reduced_eigenvalues(params, Parity::Minus, a);
  const OutcomePair probs = minus_outcome_probabilities_printed(params, a, theta);
  return discord_from(probs, lambda1, lambda2, a);
}

}  // namespace qwerner

#include "qwerner/scs_states.hpp"

#include <cmath>

#include "qwerner/errors.hpp"

namespace qwerner {

namespace {

// x^2 = exp(-2|.|^2), the squared overlap factor of one mode.
double x_sq(double mean_photon) { return std::exp(-2.0 * mean_photon); }

void check_mixing(double a) {
  if (!(std::isfinite(a) && a >= 0.0 && a <= 1.0))
    throw MixingOutOfRange("mixing parameter a must lie in [0, 1]");
}

}  // namespace

NormalizationSet::NormalizationSet(const CoherentParams& params, Parity parity) {
  params.validate();
  const double xa2 = x_sq(params.alpha_sq);
  const double xb2 = x_sq(params.beta_sq);

  const double sign = parity == Parity::Plus ? 1.0 : -1.0;
  const double n_denom = 2.0 * (1.0 + sign * xa2 * xb2);
  if (n_denom <= 0.0)
    throw DegenerateState("odd bipartite SCS undefined at alpha_sq = beta_sq = 0");
  n_ = 1.0 / std::sqrt(n_denom);

  n_plus_a_ = 1.0 / std::sqrt(2.0 * (1.0 + xa2));
  n_plus_b_ = 1.0 / std::sqrt(2.0 * (1.0 + xb2));
  inv_n_plus_a_ = std::sqrt(2.0 * (1.0 + xa2));
  inv_n_plus_b_ = std::sqrt(2.0 * (1.0 + xb2));
  inv_n_minus_a_ = std::sqrt(2.0 * (1.0 - xa2));
  inv_n_minus_b_ = std::sqrt(2.0 * (1.0 - xb2));
}

double NormalizationSet::n_minus_a() const {
  if (inv_n_minus_a_ == 0.0)
    throw DegenerateMode("odd cat state undefined for vacuum mode alpha");
  return 1.0 / inv_n_minus_a_;
}

double NormalizationSet::n_minus_b() const {
  if (inv_n_minus_b_ == 0.0)
    throw DegenerateMode("odd cat state undefined for vacuum mode beta");
  return 1.0 / inv_n_minus_b_;
}

NormalizationSet normalization_constants(const CoherentParams& params, Parity parity) {
  return NormalizationSet(params, parity);
}

double PureSCS::first() const {
  return amplitudes[parity == Parity::Plus ? 0 : 1].real();
}

double PureSCS::second() const {
  return amplitudes[parity == Parity::Plus ? 3 : 2].real();
}

PureSCS pure_scs_vector(const CoherentParams& params, Parity parity) {
  const NormalizationSet c = normalization_constants(params, parity);

  PureSCS state;
  state.parity = parity;
  state.amplitudes.setZero();
  // mode factors are multiplied first so amplitudes are bitwise invariant
  // under the alpha <-> beta swap (up to the basis permutation)
  const double half_n = c.n() / 2.0;
  if (parity == Parity::Plus) {
    state.amplitudes[0] = half_n * (c.inv_n_plus_a() * c.inv_n_plus_b());
    state.amplitudes[3] = half_n * (c.inv_n_minus_a() * c.inv_n_minus_b());
  } else {
    state.amplitudes[1] = half_n * (c.inv_n_plus_a() * c.inv_n_minus_b());
    state.amplitudes[2] = half_n * (c.inv_n_minus_a() * c.inv_n_plus_b());
  }
  return state;
}

double pure_concurrence(const CoherentParams& params, Parity parity) {
  params.validate();
  const double xa2 = x_sq(params.alpha_sq);
  const double xb2 = x_sq(params.beta_sq);
  const double sign = parity == Parity::Plus ? 1.0 : -1.0;
  const double denom = 1.0 + sign * xa2 * xb2;
  if (denom <= 0.0)
    throw DegenerateState("odd bipartite SCS undefined at alpha_sq = beta_sq = 0");
  return std::sqrt((1.0 - xa2 * xa2) * (1.0 - xb2 * xb2)) / denom;
}

QuasiWernerState quasi_werner_density(const CoherentParams& params, Parity parity, double a) {
  check_mixing(a);
  const PureSCS psi = pure_scs_vector(params, parity);

  // (1-a) I/4 + a |psi><psi|, written out so the two corners are the same
  // scalar and the matrix is exactly Hermitian
  const double h1 = psi.first();
  const double h2 = psi.second();
  const int i1 = parity == Parity::Plus ? 0 : 1;
  const int i2 = parity == Parity::Plus ? 3 : 2;

  Eigen::Matrix4cd m = ((1.0 - a) / 4.0) * Eigen::Matrix4cd::Identity();
  m(i1, i1) += a * (h1 * h1);
  m(i2, i2) += a * (h2 * h2);
  m(i1, i2) += a * (h1 * h2);
  m(i2, i1) += a * (h1 * h2);
  return QuasiWernerState{DensityMatrix4(m), a, params, parity};
}

}  // namespace qwerner

#pragma once

#include <Eigen/Dense>
#include <utility>

#include "qwerner/density_matrix.hpp"
#include "qwerner/types.hpp"

namespace qwerner::oracle {

// Rank-1 projectors {|pi1><pi1|, |pi2><pi2|} on mode Y's {|+>, |->} basis;
// orthogonal and complete.
struct ProjectorPair {
  Eigen::Matrix2cd pi1;
  Eigen::Matrix2cd pi2;
};

// Outcome probability and post-measurement state of mode X.
struct ConditionalState {
  double p = 0.0;
  Eigen::Matrix2cd rho_cond;
};

Spectrum eigvals_hermitian(const Eigen::Matrix4cd& m);
Spectrum eigvals_hermitian(const Eigen::Matrix2cd& m);

// -Sum lambda log2 lambda with 0 log 0 = 0; eigenvalues in [-1e-12, 0) are
// clamped to 0.
double von_neumann_entropy(const Spectrum& s);

Eigen::Matrix2cd partial_trace_X(const DensityMatrix4& rho);
Eigen::Matrix2cd partial_trace_Y(const DensityMatrix4& rho);

ProjectorPair measurement_projectors(const MeasurementAngles& angles);

// Applies I (x) pi, renormalizes, and traces out Y. Throws
// ZeroProbabilityOutcome if p <= 1e-14.
ConditionalState conditional_state(const DensityMatrix4& rho, const Eigen::Matrix2cd& pi);

// I(X:Y) = S(rho_X) + S(rho_Y) - S(rho_XY) in bits.
double mutual_information(const DensityMatrix4& rho);

// D = S(rho_Y) - S(rho_XY) + Sum_j p_j S(rho_X|pi_j), assembled from partial
// traces, spectra and conditional states. Zero-probability branches
// contribute 0.
double discord_by_definition(const DensityMatrix4& rho, const MeasurementAngles& angles);

// sqrt of the eigenvalues of rho * rho_tilde, rho_tilde = (sy (x) sy) rho^*
// (sy (x) sy), descending. rho*rho_tilde is not Hermitian; a general
// eigensolver is used and imaginary residues above 1e-10 are rejected.
Spectrum wootters_sqrt_spectrum(const DensityMatrix4& rho);

// max(0, 2*lambda_max - sum(lambda)) over the sqrt spectrum.
double wootters_concurrence(const DensityMatrix4& rho);

}  // namespace qwerner::oracle

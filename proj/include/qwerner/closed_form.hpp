#pragma once

#include <array>

#include "qwerner/types.hpp"

namespace qwerner {

// Spectrum of the quasi-Werner joint state, descending:
// {(1+3a)/4, (1-a)/4, (1-a)/4, (1-a)/4}. Parity- and parameter-independent.
using JointSpectrum = std::array<double, 4>;

// Probabilities of the two measurement outcomes on mode Y.
struct OutcomePair {
  double p1 = 0.0;
  double p2 = 0.0;
};

JointSpectrum joint_eigenvalues(double a);

// Eigenvalues of the reduced state rho_Y: (1-a)/2 + a*h^2 for the two
// expansion coefficients h of the parity's pure state, in basis order.
std::pair<double, double> reduced_eigenvalues(const CoherentParams& params, Parity parity,
                                              double a);

// Outcome probabilities of the {pi1, pi2} measurement. P1 carries cos^2 on
// the first reduced component, so P1(0), P2(0) are the reduced eigenvalues
// and P1(theta) = P2(pi/2 - theta).
OutcomePair outcome_probabilities(const CoherentParams& params, Parity parity, double a,
                                  double theta);

// Sum_j P_j H2((1-a)/(4 P_j)) in bits. Zero-probability branches contribute 0.
double conditional_entropy(const CoherentParams& params, Parity parity, double a, double theta);

// Quantum discord S(rho_Y) - S(rho_XY) + S(rho_X|{Pi_j}) in bits at the
// given measurement angle. The closed form carries no phi dependence.
double discord(const CoherentParams& params, Parity parity, double a, double theta);

// I = 2 S(rho_Y) - S(rho_XY) in bits; rho_X and rho_Y share a spectrum for
// these states.
double mutual_information(const CoherentParams& params, Parity parity, double a);

// Square roots of the eigenvalues of rho * rho_tilde, descending:
// {sqrt(d1 d2) + k, (1-a)/4, (1-a)/4, sqrt(d1 d2) - k} sorted, where d1, d2
// are the corner diagonal entries and k the corner coupling a*h1*h2.
std::array<double, 4> sqrt_eigenvalues_rho_rhotilde(const CoherentParams& params, Parity parity,
                                                    double a);

// C = max(0, 2*lambda_max - sum(lambda)) over the sqrt spectrum; in [0, 1].
double concurrence_mixed(const CoherentParams& params, Parity parity, double a);

// E = H2((1 + sqrt(1 - C^2))/2) in bits.
double entanglement_of_formation(const CoherentParams& params, Parity parity, double a);

// Large-photon-number limit: both expansion weights -> 1/2, P1 = P2 = 1/2,
// theta drops out, and C = max(0, (3a-1)/2). Asymptotic reference for both
// parities.
struct WernerMeasures {
  double discord = 0.0;
  double eof = 0.0;
};
WernerMeasures werner_limit_measures(double a, double theta = 0.0);

// Minus-parity probabilities with P2 evaluated with the even-state constant
// n+^2 instead of n-^2 (a published variant retained for comparison; it
// breaks P1 + P2 = 1). Exposed only for the verify subcommand's
// adjudication report.
OutcomePair minus_outcome_probabilities_printed(const CoherentParams& params, double a,
                                                double theta);

// Minus-parity discord evaluated with the variant probabilities above.
double minus_discord_printed(const CoherentParams& params, double a, double theta);

}  // namespace qwerner

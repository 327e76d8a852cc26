#pragma once

#include <Eigen/Dense>

#include "qwerner/density_matrix.hpp"
#include "qwerner/types.hpp"

namespace qwerner {

// Normalization constants of the bipartite SCS and the single-mode cat
// states:
//   n      = [2(1 +/- x_a^2 x_b^2)]^(-1/2)   (sign per parity)
//   N+/-   = [2(1 +/- x^2)]^(-1/2)           per mode
// The odd-cat constants N- diverge for a vacuum mode; their accessors throw
// DegenerateMode in that case. The reciprocals 1/N- are always finite and
// are what the state construction consumes.
class NormalizationSet {
 public:
  NormalizationSet(const CoherentParams& params, Parity parity);

  double n() const { return n_; }
  double n_plus_a() const { return n_plus_a_; }
  double n_plus_b() const { return n_plus_b_; }
  double n_minus_a() const;  // throws DegenerateMode if alpha_sq = 0
  double n_minus_b() const;  // throws DegenerateMode if beta_sq = 0

  // 1/N+- per mode; zero at vacuum for the odd constants.
  double inv_n_plus_a() const { return inv_n_plus_a_; }
  double inv_n_plus_b() const { return inv_n_plus_b_; }
  double inv_n_minus_a() const { return inv_n_minus_a_; }
  double inv_n_minus_b() const { return inv_n_minus_b_; }

 private:
  double n_;
  double n_plus_a_, n_plus_b_;
  double inv_n_plus_a_, inv_n_plus_b_;
  double inv_n_minus_a_, inv_n_minus_b_;
};

// Pure bipartite SCS expanded over the ordered cat basis. The construction
// yields real nonnegative amplitudes: positions 1 and 4 carry parity Plus,
// positions 2 and 3 parity Minus.
struct PureSCS {
  Eigen::Vector4cd amplitudes;
  Parity parity;

  // The two nonzero expansion coefficients, in basis order.
  double first() const;
  double second() const;
};

// rho = (1-a) I/4 + a |psi><psi| with the I/4 identity on the 4-dimensional
// cat-basis subspace.
struct QuasiWernerState {
  DensityMatrix4 rho;
  double mixing;
  CoherentParams params;
  Parity parity;
};

NormalizationSet normalization_constants(const CoherentParams& params, Parity parity);

PureSCS pure_scs_vector(const CoherentParams& params, Parity parity);

// sqrt((1-x_a^4)(1-x_b^4)) / (1 +/- x_a^2 x_b^2), in [0, 1].
double pure_concurrence(const CoherentParams& params, Parity parity);

QuasiWernerState quasi_werner_density(const CoherentParams& params, Parity parity, double a);

}  // namespace qwerner

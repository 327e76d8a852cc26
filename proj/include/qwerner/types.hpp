#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "qwerner/errors.hpp"

namespace qwerner {

// Mean photon numbers |alpha|^2, |beta|^2 of the two modes. Only the moduli
// enter any formula; phases are deliberately not modeled.
struct CoherentParams {
  double alpha_sq = 0.0;
  double beta_sq = 0.0;

  void validate() const {
    if (!(std::isfinite(alpha_sq) && alpha_sq >= 0.0))
      throw InvalidArgument("alpha_sq must be finite and >= 0");
    if (!(std::isfinite(beta_sq) && beta_sq >= 0.0))
      throw InvalidArgument("beta_sq must be finite and >= 0");
  }

  // Overlap factors x = exp(-|.|^2), in (0, 1].
  double x_alpha() const { return std::exp(-alpha_sq); }
  double x_beta() const { return std::exp(-beta_sq); }
};

// Selects the even (+) or odd (-) bipartite superposed coherent state.
enum class Parity { Plus, Minus };

inline const char* to_string(Parity p) { return p == Parity::Plus ? "plus" : "minus"; }

inline Parity parity_from_string(const std::string& s) {
  if (s == "plus") return Parity::Plus;
  if (s == "minus") return Parity::Minus;
  throw InvalidArgument("parity must be 'plus' or 'minus', got '" + s + "'");
}

// Projective measurement basis on mode Y:
//   |pi1> = cos(theta)|+> + e^{i phi} sin(theta)|->
//   |pi2> = sin(theta)|+> - e^{i phi} cos(theta)|->
// theta is stored canonically: values outside [0, pi/2] are reduced mod pi/2
// (the projector pair is invariant under theta -> theta + pi/2 up to a label
// swap); phi is wrapped into [0, 2*pi).
class MeasurementAngles {
 public:
  MeasurementAngles(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

// Everything the CLI reports at one parameter point. Entropic quantities in
// bits; delta is the theta-minimized discord, theta_opt its argmin.
struct CorrelationReport {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  double delta = 0.0;
  double theta_opt = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double delta_minus_eof = 0.0;
};

}  // namespace qwerner

#include "qwerner/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "qwerner/errors.hpp"

namespace qwerner::oracle {

namespace {

using std::complex;

void require_hermitian(const Eigen::MatrixXcd& m) {
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-10))
    throw NotHermitian("Hermiticity defect " + std::to_string(defect));
}

template <typename Matrix>
Spectrum hermitian_spectrum(const Matrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  Spectrum out(solver.eigenvalues().data(),
               solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

Eigen::Matrix4cd kron_identity_left(const Eigen::Matrix2cd& m) {
  Eigen::Matrix4cd out = Eigen::Matrix4cd::Zero();
  out.block<2, 2>(0, 0) = m;
  out.block<2, 2>(2, 2) = m;
  return out;
}

}  // namespace

Spectrum eigvals_hermitian(const Eigen::Matrix4cd& m) { return hermitian_spectrum(m); }

Spectrum eigvals_hermitian(const Eigen::Matrix2cd& m) { return hermitian_spectrum(m); }

double von_neumann_entropy(const Spectrum& s) {
  double entropy = 0.0;
  for (double lambda : s) {
    if (lambda < -1e-12)
      throw InvalidArgument("spectrum entry below -1e-12: " + std::to_string(lambda));
    entropy -= xlog2x(std::max(lambda, 0.0));
  }
  return std::max(entropy, 0.0);
}

// Basis index of the joint state is 2*i_X + i_Y; each op returns the reduced
// state of the named subsystem.
Eigen::Matrix2cd partial_trace_X(const DensityMatrix4& rho) {
  const Eigen::Matrix4cd& m = rho.matrix();
  Eigen::Matrix2cd rho_x;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) rho_x(i, k) = m(2 * i, 2 * k) + m(2 * i + 1, 2 * k + 1);
  return rho_x;
}

Eigen::Matrix2cd partial_trace_Y(const DensityMatrix4& rho) {
  const Eigen::Matrix4cd& m = rho.matrix();
  Eigen::Matrix2cd rho_y;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) rho_y(j, k) = m(j, k) + m(2 + j, 2 + k);
  return rho_y;
}

ProjectorPair measurement_projectors(const MeasurementAngles& angles) {
  const double c = std::cos(angles.theta());
  const double s = std::sin(angles.theta());
  const complex<double> phase = std::polar(1.0, angles.phi());

  Eigen::Vector2cd pi1_vec(c, phase * s);
  Eigen::Vector2cd pi2_vec(s, -phase * c);
  return ProjectorPair{pi1_vec * pi1_vec.adjoint(), pi2_vec * pi2_vec.adjoint()};
}

ConditionalState conditional_state(const DensityMatrix4& rho, const Eigen::Matrix2cd& pi) {
  const Eigen::Matrix4cd projector = kron_identity_left(pi);
  const Eigen::Matrix4cd projected = projector * rho.matrix() * projector;

  const double p = projected.trace().real();
  if (p <= 1e-14) throw ZeroProbabilityOutcome("outcome probability " + std::to_string(p));

  Eigen::Matrix2cd cond;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      cond(i, k) = (projected(2 * i, 2 * k) + projected(2 * i + 1, 2 * k + 1)) / p;
  return ConditionalState{p, cond};
}

double mutual_information(const DensityMatrix4& rho) {
  const double s_x = von_neumann_entropy(eigvals_hermitian(partial_trace_X(rho)));
  const double s_y = von_neumann_entropy(eigvals_hermitian(partial_trace_Y(rho)));
  const double s_xy = von_neumann_entropy(eigvals_hermitian(rho.matrix()));
  return s_x + s_y - s_xy;
}

double discord_by_definition(const DensityMatrix4& rho, const MeasurementAngles& angles) {
  const double s_y = von_neumann_entropy(eigvals_hermitian(partial_trace_Y(rho)));
  const double s_xy = von_neumann_entropy(eigvals_hermitian(rho.matrix()));

  const ProjectorPair projectors = measurement_projectors(angles);
  double cond_entropy = 0.0;
  for (const Eigen::Matrix2cd* pi : {&projectors.pi1, &projectors.pi2}) {
    try {
      const ConditionalState branch = conditional_state(rho, *pi);
      cond_entropy += branch.p * von_neumann_entropy(eigvals_hermitian(branch.rho_cond));
    } catch (const ZeroProbabilityOutcome&) {
      // zero-probability branch contributes exactly 0
    }
  }
  return s_y - s_xy + cond_entropy;
}

Spectrum wootters_sqrt_spectrum(const DensityMatrix4& rho) {
  Eigen::Matrix2cd sigma_y;
  sigma_y << 0.0, complex<double>(0.0, -1.0), complex<double>(0.0, 1.0), 0.0;
  Eigen::Matrix4cd sy_sy = Eigen::Matrix4cd::Zero();
  sy_sy.block<2, 2>(0, 2) = sigma_y * sigma_y(0, 1);
  sy_sy.block<2, 2>(2, 0) = sigma_y * sigma_y(1, 0);

  const Eigen::Matrix4cd rho_tilde = sy_sy * rho.matrix().conjugate() * sy_sy;
  const Eigen::Matrix4cd product = rho.matrix() * rho_tilde;

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(product, false);
  double lambda_max = 0.0;
  for (int i = 0; i < 4; ++i) {
    const complex<double> lambda = solver.eigenvalues()(i);
    if (!(std::abs(lambda.imag()) <= 1e-10))
      throw Error("EigensolverResidual",
                  "rho*rho_tilde eigenvalue has imaginary part " + std::to_string(lambda.imag()));
    lambda_max = std::max(lambda_max, lambda.real());
  }
  // Exact zeros of rho*rho_tilde come back as O(eps) noise that the square
  // root would blow up to ~1e-8; floor them at machine-precision scale.
  const double floor = 256.0 * std::numeric_limits<double>::epsilon() * std::max(lambda_max, 1e-300);
  Spectrum out;
  out.reserve(4);
  for (int i = 0; i < 4; ++i) {
    const double lambda = solver.eigenvalues()(i).real();
    out.push_back(lambda <= floor ? 0.0 : std::sqrt(lambda));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double wootters_concurrence(const DensityMatrix4& rho) {
  const Spectrum s = wootters_sqrt_spectrum(rho);
  const double sum = s[0] + s[1] + s[2] + s[3];
  return std::max(0.0, 2.0 * s[0] - sum);
}

}  // namespace qwerner::oracle

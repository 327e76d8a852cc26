#include "qwerner/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "qwerner/errors.hpp"

namespace qwerner {

DensityMatrix4::DensityMatrix4(const Eigen::Matrix4cd& m) : m_(m) {
  const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm_defect <= 1e-12))
    throw NotHermitian("density matrix Hermiticity defect " + std::to_string(herm_defect));
  const double trace_defect = std::abs(m.trace() - std::complex<double>(1.0, 0.0));
  if (!(trace_defect <= 1e-12))
    throw Error("InvalidDensityMatrix", "trace deviates from 1 by " + std::to_string(trace_defect));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m, Eigen::EigenvaluesOnly);
  if (!(solver.eigenvalues().minCoeff() >= -1e-12))
    throw Error("InvalidDensityMatrix", "matrix is not positive semidefinite");
}

}  // namespace qwerner

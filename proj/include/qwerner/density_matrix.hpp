#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qwerner {

// Real eigenvalues in descending order. For density-matrix spectra the
// entries are >= -1e-12 and sum to 1 within 1e-12.
using Spectrum = std::vector<double>;

// 4x4 complex density matrix over the ordered cat basis
// (|+a,+b>, |+a,-b>, |-a,+b>, |-a,-b>); mode X is the first tensor slot.
// Construction validates Hermiticity (1e-12), unit trace (1e-12) and
// positivity (min eigenvalue >= -1e-12).
class DensityMatrix4 {
 public:
  explicit DensityMatrix4(const Eigen::Matrix4cd& m);

  const Eigen::Matrix4cd& matrix() const { return m_; }

 private:
  Eigen::Matrix4cd m_;
};

}  // namespace qwerner

#include "corrkernel/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace corrkernel::linalg {

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

Eigen::MatrixXd reciprocal_spectrum(const Eigen::MatrixXd& m, double rel_cutoff, bool sqrt_inverse) {
  const SymmetricEigen eig = symmetric_eigen(m);
  const double max_eig = eig.values.size() > 0 ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double cutoff = rel_cutoff * max_eig;

  Eigen::VectorXd inv = Eigen::VectorXd::Zero(eig.values.size());
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cutoff && eig.values(i) > 0.0) {
      inv(i) = sqrt_inverse ? 1.0 / std::sqrt(eig.values(i)) : 1.0 / eig.values(i);
    }
  }
  return eig.vectors * inv.asDiagonal() * eig.vectors.transpose();
}

}  // namespace

Eigen::MatrixXd pseudo_inverse_psd(const Eigen::MatrixXd& m, double rel_cutoff) {
  return reciprocal_spectrum(m, rel_cutoff, false);
}

Eigen::MatrixXd pseudo_inverse_sqrt_psd(const Eigen::MatrixXd& m, double rel_cutoff) {
  return reciprocal_spectrum(m, rel_cutoff, true);
}

}  // namespace corrkernel::linalg

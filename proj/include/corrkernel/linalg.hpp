#pragma once

#include <Eigen/Dense>

namespace corrkernel::linalg {

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

// Eigendecomposition of a (nearly) symmetric matrix; the input is
// symmetrized first so roundoff asymmetry cannot leak into results.
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& m);

// Moore-Penrose inverse of a symmetric PSD matrix. Eigenvalues below
// rel_cutoff * max(eigenvalue) count as zero.
Eigen::MatrixXd pseudo_inverse_psd(const Eigen::MatrixXd& m, double rel_cutoff = 1e-10);

// Inverse square root with the same cutoff convention.
Eigen::MatrixXd pseudo_inverse_sqrt_psd(const Eigen::MatrixXd& m, double rel_cutoff = 1e-10);

}  // namespace corrkernel::linalg

#include "corrkernel/modal.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "corrkernel/errors.hpp"
#include "corrkernel/log.hpp"

namespace corrkernel {

ModalDecomposition decompose(const JointDistribution& joint, double sigma_tol) {
  const Eigen::VectorXd& px = joint.px();
  const Eigen::VectorXd& py = joint.py();
  const Eigen::Index nx = joint.pxy().rows();
  const Eigen::Index ny = joint.pxy().cols();

  // B~ = D_x^{-1/2} (P - px py^T) D_y^{-1/2}. Subtracting the rank-one
  // independent part removes the trivial sigma = 1 triplet (sqrt px, sqrt py)
  // exactly, which also handles repeated unit singular values from
  // deterministic dependence.
  Eigen::VectorXd sx = px.cwiseSqrt();
  Eigen::VectorXd sy = py.cwiseSqrt();
  Eigen::MatrixXd b_tilde(nx, ny);
  for (Eigen::Index i = 0; i < nx; ++i) {
    for (Eigen::Index j = 0; j < ny; ++j) {
      b_tilde(i, j) = (joint.pxy()(i, j) - px(i) * py(j)) / (sx(i) * sy(j));
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b_tilde, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& singulars = svd.singularValues();

  const Eigen::Index max_modes = std::min(nx, ny) - 1;
  Eigen::Index k = 0;
  while (k < singulars.size() && k < max_modes && singulars(k) > sigma_tol) ++k;
  if (k < singulars.size() && k == max_modes && singulars(k) > 1e-6) {
    log_info("discarding singular value " + std::to_string(singulars(k)) +
             " beyond the K <= min(|X|,|Y|)-1 bound");
  }

  ModalDecomposition result{joint.x_alphabet(), joint.y_alphabet(),
                            Eigen::VectorXd::Zero(k), Eigen::MatrixXd::Zero(k, nx),
                            Eigen::MatrixXd::Zero(k, ny), 0.0};
  for (Eigen::Index i = 0; i < k; ++i) {
    result.sigmas(i) = std::min(singulars(i), 1.0);
    Eigen::VectorXd f = svd.matrixU().col(i).cwiseQuotient(sx);
    Eigen::VectorXd g = svd.matrixV().col(i).cwiseQuotient(sy);
    // Sign canonicalization: first f* coordinate with magnitude > 1e-9
    // positive.
    for (Eigen::Index x = 0; x < nx; ++x) {
      if (std::abs(f(x)) > 1e-9) {
        if (f(x) < 0.0) {
          f = -f;
          g = -g;
        }
        break;
      }
    }
    result.f_star.row(i) = f.transpose();
    result.g_star.row(i) = g.transpose();
  }
  result.rho = k > 0 ? result.sigmas(0) : 0.0;
  return result;
}

double maximal_correlation(const JointDistribution& joint) {
  const double rho = decompose(joint).rho;
  return std::clamp(rho, 0.0, 1.0);
}

Feature f_star_feature(const ModalDecomposition& decomposition) {
  if (decomposition.k() == 0) {
    throw EmptyFeatureError("independent distribution: f* is empty (K = 0)");
  }
  return Feature(decomposition.x_alphabet, decomposition.f_star);
}

}  // namespace corrkernel

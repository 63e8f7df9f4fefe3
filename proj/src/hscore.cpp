#include "corrkernel/hscore.hpp"

#include "corrkernel/errors.hpp"
#include "corrkernel/linalg.hpp"
#include "corrkernel/modal.hpp"

namespace corrkernel {

double h_score(const Feature& f, const JointDistribution& joint) {
  if (f.alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("feature and distribution alphabets differ");
  }
  if (f.dim() == 0) return 0.0;

  const Eigen::VectorXd& px = joint.px();
  const Eigen::VectorXd& py = joint.py();
  const Eigen::MatrixXd lambda_inv = linalg::pseudo_inverse_psd(second_moment(f, px));

  // E[f~ | Y=y] = E[f | Y=y] - E[f].
  Eigen::VectorXd mean = f.values() * px;
  Eigen::MatrixXd cond = f.values() * joint.pxy();  // d x |Y|, column y = E[f 1{Y=y}]
  double score = 0.0;
  for (Eigen::Index y = 0; y < cond.cols(); ++y) {
    Eigen::VectorXd mu = cond.col(y) / py(y) - mean;
    score += py(y) * mu.dot(lambda_inv * mu);
  }
  return 0.5 * score;
}

double h_score_max(const JointDistribution& joint) {
  return 0.5 * decompose(joint).sigmas.squaredNorm();
}

double h_score_kernel(const Kernel& kernel, const JointDistribution& joint) {
  if (kernel.alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("kernel and distribution alphabets differ");
  }
  const JointDistribution coupled = joint.xx_prime();
  const double dependent_term = (coupled.pxy().array() * kernel.gram().array()).sum();
  const double independent_term = joint.px().dot(kernel.gram() * joint.px());
  return 0.5 * (dependent_term - independent_term);
}

double subspace_h_score_binary(const FeatureSubspace& subspace, const JointDistribution& joint) {
  if (joint.ny() != 2) {
    throw PreconditionError("subspace H-score requires binary Y");
  }
  if (subspace.basis().alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("subspace and distribution alphabets differ");
  }
  const ModalDecomposition d = decompose(joint);
  if (d.k() == 0) return 0.0;
  const Feature projected = project(f_star_feature(d), subspace);
  const double norm = feature_norm(projected, joint.px());
  return 0.5 * d.rho * d.rho * norm * norm;
}

}  // namespace corrkernel

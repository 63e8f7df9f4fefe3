#include "corrkernel/kernel.hpp"

#include <cmath>

#include "corrkernel/errors.hpp"
#include "corrkernel/linalg.hpp"
#include "corrkernel/modal.hpp"

namespace corrkernel {

Kernel::Kernel(Alphabet alphabet, Eigen::MatrixXd gram)
    : alphabet_(std::move(alphabet)), gram_(std::move(gram)) {
  if (static_cast<std::size_t>(gram_.rows()) != alphabet_.size() ||
      gram_.rows() != gram_.cols()) {
    throw InvalidInputError("kernel Gram table must be square over the alphabet");
  }
  if (!gram_.allFinite()) {
    throw NotAKernelError("Gram table contains non-finite values");
  }
  const double scale = std::max(1.0, gram_.cwiseAbs().maxCoeff());
  const double asym = (gram_ - gram_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol * scale) {
    throw NotAKernelError("Gram table is not symmetric within tolerance");
  }
  gram_ = 0.5 * (gram_ + gram_.transpose().eval());

  const auto eig = linalg::symmetric_eigen(gram_);
  const double max_eig = eig.values.maxCoeff();
  if (eig.values.minCoeff() < -kPsdTol * std::max(1.0, max_eig)) {
    throw NotAKernelError("Gram table is indefinite beyond tolerance");
  }
}

Kernel center_kernel(const Kernel& kernel, const Eigen::VectorXd& px) {
  if (static_cast<std::size_t>(px.size()) != kernel.size()) {
    throw AlphabetMismatchError("weight vector length does not match the kernel alphabet");
  }
  const Eigen::MatrixXd& g = kernel.gram();
  Eigen::VectorXd kbar = g * px;  // kbar(x) = E[k(X,x)], symmetric table
  const double mean = px.dot(kbar);
  Eigen::MatrixXd centered =
      g - kbar * Eigen::RowVectorXd::Ones(g.cols()) - Eigen::VectorXd::Ones(g.rows()) * kbar.transpose() +
      mean * Eigen::MatrixXd::Ones(g.rows(), g.cols());
  return Kernel(kernel.alphabet(), centered);
}

Feature apply_operator(const Kernel& kernel, const Feature& f, const Eigen::VectorXd& px) {
  if (f.alphabet() != kernel.alphabet()) {
    throw AlphabetMismatchError("feature and kernel are defined on different alphabets");
  }
  if (f.dim() != 1) {
    throw PreconditionError("apply_operator expects a one-dimensional feature");
  }
  // [tau(f)](x) = sum_{x'} px(x') k(x',x) f(x').
  Eigen::VectorXd out =
      kernel.gram().transpose() * (px.array() * f.values().row(0).transpose().array()).matrix();
  return Feature(f.alphabet(), out.transpose());
}

Kernel projection_kernel(const FeatureSubspace& subspace) {
  const Eigen::MatrixXd& basis = subspace.basis().values();
  Eigen::MatrixXd inv =
      linalg::pseudo_inverse_psd(subspace.gram(), FeatureSubspace::kGramConditionCutoff);
  return Kernel(subspace.basis().alphabet(), basis.transpose() * inv * basis);
}

Kernel maximal_correlation_kernel(const JointDistribution& joint) {
  const ModalDecomposition d = decompose(joint);
  const Feature fs = f_star_feature(d);  // throws EmptyFeatureError when K = 0
  return projection_kernel(FeatureSubspace(fs, joint.px()));
}

Feature feature_map(const Kernel& kernel, double rel_tol) {
  const auto eig = linalg::symmetric_eigen(kernel.gram());
  const double max_eig = eig.values.maxCoeff();
  if (eig.values.minCoeff() < -Kernel::kPsdTol * std::max(1.0, max_eig)) {
    throw NotAKernelError("Gram table is indefinite beyond tolerance");
  }
  const double cutoff = std::max(0.0, rel_tol * max_eig);

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {  // descending order
    if (eig.values(i) > cutoff) kept.push_back(i);
  }
  Eigen::MatrixXd values(static_cast<Eigen::Index>(kept.size()), kernel.gram().rows());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    values.row(static_cast<Eigen::Index>(r)) =
        std::sqrt(eig.values(kept[r])) * eig.vectors.col(kept[r]).transpose();
  }
  return Feature(kernel.alphabet(), values);
}

KdmModel kdm(const Kernel& kernel, const JointDistribution& joint) {
  if (kernel.alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("kernel and distribution alphabets differ");
  }
  const Kernel centered = center_kernel(kernel, joint.px());
  // table[x][y] = P_Y(y) + sum_{x'} P(x',y) k~(x',x).
  Eigen::MatrixXd table = Eigen::VectorXd::Ones(joint.pxy().rows()) * joint.py().transpose() +
                          centered.gram() * joint.pxy();
  return KdmModel{joint.x_alphabet(), joint.y_alphabet(), table};
}

std::vector<std::string> kdm_predict(const KdmModel& model) {
  std::vector<std::string> predictions;
  predictions.reserve(static_cast<std::size_t>(model.table.rows()));
  for (Eigen::Index x = 0; x < model.table.rows(); ++x) {
    Eigen::Index best = 0;
    for (Eigen::Index y = 1; y < model.table.cols(); ++y) {
      if (model.table(x, y) > model.table(x, best)) best = y;  // ties keep alphabet order
    }
    predictions.push_back(model.y_alphabet.label(static_cast<std::size_t>(best)));
  }
  return predictions;
}

}  // namespace corrkernel

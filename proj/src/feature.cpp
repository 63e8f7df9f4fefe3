#include "corrkernel/feature.hpp"

#include <cmath>

#include "corrkernel/errors.hpp"
#include "corrkernel/linalg.hpp"

namespace corrkernel {

namespace {

void require_same_alphabet(const Feature& a, const Feature& b) {
  if (a.alphabet() != b.alphabet()) {
    throw AlphabetMismatchError("features are defined on different alphabets");
  }
}

void require_px(const Feature& f, const Eigen::VectorXd& px) {
  if (static_cast<std::size_t>(px.size()) != f.alphabet().size()) {
    throw AlphabetMismatchError("weight vector length does not match the feature alphabet");
  }
}

void require_one_dim(const Feature& f, const char* what) {
  if (f.dim() != 1) {
    throw PreconditionError(std::string(what) + " expects a one-dimensional feature");
  }
}

}  // namespace

Feature::Feature(Alphabet alphabet, Eigen::MatrixXd values)
    : alphabet_(std::move(alphabet)), values_(std::move(values)) {
  if (static_cast<std::size_t>(values_.cols()) != alphabet_.size()) {
    throw InvalidInputError("feature table width does not match the alphabet size");
  }
  if (!values_.allFinite()) {
    throw InvalidInputError("feature table contains non-finite values");
  }
}

FeatureSubspace::FeatureSubspace(Feature basis, Eigen::VectorXd px)
    : basis_(std::move(basis)), px_(std::move(px)) {
  require_px(basis_, px_);
  if (basis_.dim() == 0) {
    throw EmptyFeatureError("subspace basis must have at least one dimension");
  }
  gram_ = second_moment(basis_, px_);
  const auto eig = linalg::symmetric_eigen(gram_);
  const double max_eig = eig.values.maxCoeff();
  const double min_eig = eig.values.minCoeff();
  if (max_eig <= 0.0 || min_eig <= kGramConditionCutoff * max_eig) {
    throw IllConditionedSubspaceError("basis Gram matrix is singular beyond tolerance");
  }
}

double inner_product(const Feature& f1, const Feature& f2, const Eigen::VectorXd& px) {
  require_same_alphabet(f1, f2);
  require_px(f1, px);
  require_one_dim(f1, "inner_product");
  require_one_dim(f2, "inner_product");
  return (f1.values().row(0).transpose().array() * f2.values().row(0).transpose().array() *
          px.array())
      .sum();
}

double feature_norm(const Feature& f, const Eigen::VectorXd& px) {
  return std::sqrt(std::max(0.0, inner_product(f, f, px)));
}

Feature center(const Feature& f, const Eigen::VectorXd& px) {
  require_px(f, px);
  Eigen::VectorXd mean = f.values() * px;  // per-dimension E[f]
  Eigen::MatrixXd centered = f.values().colwise() - mean;
  return Feature(f.alphabet(), centered);
}

Eigen::MatrixXd second_moment(const Feature& f, const Eigen::VectorXd& px) {
  require_px(f, px);
  return f.values() * px.asDiagonal() * f.values().transpose();
}

Feature project(const Feature& f, const FeatureSubspace& subspace) {
  require_same_alphabet(f, subspace.basis());
  require_one_dim(f, "project");
  // Normal equations: coeffs = Lambda^+ E[basis * f].
  const Eigen::MatrixXd& basis = subspace.basis().values();
  Eigen::VectorXd rhs = basis * subspace.px().asDiagonal() * f.values().row(0).transpose();
  Eigen::VectorXd coeffs =
      linalg::pseudo_inverse_psd(subspace.gram(), FeatureSubspace::kGramConditionCutoff) * rhs;
  return Feature(f.alphabet(), coeffs.transpose() * basis);
}

Feature whiten(const Feature& f, const Eigen::VectorXd& px, double rel_cutoff) {
  const Feature centered = center(f, px);
  const Eigen::MatrixXd cov = second_moment(centered, px);
  const auto eig = linalg::symmetric_eigen(cov);
  const double max_eig = eig.values.size() > 0 ? eig.values.maxCoeff() : 0.0;
  const double cutoff = rel_cutoff * max_eig;

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = eig.values.size() - 1; i >= 0; --i) {  // descending
    if (eig.values(i) > cutoff && eig.values(i) > 0.0) kept.push_back(i);
  }
  Eigen::MatrixXd out(static_cast<Eigen::Index>(kept.size()), centered.values().cols());
  for (std::size_t r = 0; r < kept.size(); ++r) {
    out.row(static_cast<Eigen::Index>(r)) = eig.vectors.col(kept[r]).transpose() *
                                            centered.values() / std::sqrt(eig.values(kept[r]));
  }
  return Feature(f.alphabet(), out);
}

}  // namespace corrkernel

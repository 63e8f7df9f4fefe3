#pragma once

#include <Eigen/Dense>

#include "corrkernel/alphabet.hpp"

namespace corrkernel {

// A d-dimensional real-valued function on a finite alphabet, stored as a
// d x |X| value table. dim 0 (empty table) is allowed; it is what the
// feature map of the zero kernel produces.
class Feature {
 public:
  Feature(Alphabet alphabet, Eigen::MatrixXd values);

  const Alphabet& alphabet() const { return alphabet_; }
  const Eigen::MatrixXd& values() const { return values_; }
  std::size_t dim() const { return static_cast<std::size_t>(values_.rows()); }

  // f(x) as a column vector.
  Eigen::VectorXd at(std::size_t x_index) const { return values_.col(x_index); }

 private:
  Alphabet alphabet_;
  Eigen::MatrixXd values_;  // dim x |X|
};

// span{f_1,...,f_d} with the P_X-weighted geometry attached. Construction
// rejects bases whose Gram matrix is singular beyond tolerance.
class FeatureSubspace {
 public:
  static constexpr double kGramConditionCutoff = 1e-10;

  FeatureSubspace(Feature basis, Eigen::VectorXd px);

  const Feature& basis() const { return basis_; }
  const Eigen::VectorXd& px() const { return px_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

 private:
  Feature basis_;
  Eigen::VectorXd px_;
  Eigen::MatrixXd gram_;  // E[basis basis^T]
};

// <f1,f2> = sum_x P_X(x) f1(x) f2(x); one-dimensional features only.
double inner_product(const Feature& f1, const Feature& f2, const Eigen::VectorXd& px);

// P_X-weighted L2 norm of a one-dimensional feature.
double feature_norm(const Feature& f, const Eigen::VectorXd& px);

// f - E[f], per dimension.
Feature center(const Feature& f, const Eigen::VectorXd& px);

// Lambda_f = E[f f^T], a d x d symmetric PSD matrix.
Eigen::MatrixXd second_moment(const Feature& f, const Eigen::VectorXd& px);

// Orthogonal projection of a one-dimensional f onto the span of G, solved
// through the Gram normal equations with a thresholded pseudo-inverse.
Feature project(const Feature& f, const FeatureSubspace& subspace);

// Lambda_{f~}^{-1/2} (f - E[f]); dimensions whose covariance eigenvalue
// falls below the cutoff are dropped, so the result has exactly identity
// covariance.
Feature whiten(const Feature& f, const Eigen::VectorXd& px, double rel_cutoff = 1e-10);

}  // namespace corrkernel

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"

namespace corrkernel {

// Symmetric PSD Gram table over X x X. Construction checks symmetry
// (within 1e-10 relative to the largest entry) and positive
// semidefiniteness (smallest eigenvalue >= -1e-8 * max(1, largest)).
class Kernel {
 public:
  static constexpr double kSymmetryTol = 1e-10;
  static constexpr double kPsdTol = 1e-8;

  Kernel(Alphabet alphabet, Eigen::MatrixXd gram);

  const Alphabet& alphabet() const { return alphabet_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  std::size_t size() const { return static_cast<std::size_t>(gram_.rows()); }

 private:
  Alphabet alphabet_;
  Eigen::MatrixXd gram_;
};

// Generalized conditional distribution induced by a kernel: rows sum to one
// but entries may be negative.
struct KdmModel {
  Alphabet x_alphabet;
  Alphabet y_alphabet;
  Eigen::MatrixXd table;  // |X| x |Y|
};

// k~(x,x') = k(x,x') - kbar(x) - kbar(x') + E[kbar(X)], where
// kbar(x) = E_{P_X}[k(X,x)]. The result is P_X-mean-free in each argument
// and stays PSD.
Kernel center_kernel(const Kernel& kernel, const Eigen::VectorXd& px);

// [tau(f)](x) = sum_{x'} P_X(x') k(x',x) f(x'), for one-dimensional f.
Feature apply_operator(const Kernel& kernel, const Feature& f, const Eigen::VectorXd& px);

// k(x,x') = f(x)^T Lambda_f^{-1} f(x') for a basis f of the subspace;
// basis-independent.
Kernel projection_kernel(const FeatureSubspace& subspace);

// Projection kernel of span{f*}. Throws EmptyFeatureError when X and Y are
// independent (K = 0).
Kernel maximal_correlation_kernel(const JointDistribution& joint);

// A feature map nu with <nu(x),nu(x')> = k(x,x') (plain Euclidean inner
// product), built from the eigendecomposition of the Gram table. The
// dimension equals the numerical rank at relative cutoff rel_tol.
Feature feature_map(const Kernel& kernel, double rel_tol = 1e-10);

// Kernelized discriminative model: table[x][y] = P_Y(y)(1 + E[k~(X,x)|Y=y]).
KdmModel kdm(const Kernel& kernel, const JointDistribution& joint);

// argmax_y of the KDM table per x, ties broken by y-alphabet order.
std::vector<std::string> kdm_predict(const KdmModel& model);

}  // namespace corrkernel

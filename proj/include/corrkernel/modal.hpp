#pragma once

#include <Eigen/Dense>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"

namespace corrkernel {

// Modal decomposition of a joint distribution:
//   P(x,y) = P_X(x) P_Y(y) (1 + sum_i sigma_i f*_i(x) g*_i(y)),
// with sigma_1 >= ... >= sigma_K > 0 and f*, g* orthonormal zero-mean
// function families under P_X, P_Y. rho = sigma_1 is the HGR maximal
// correlation (0 when K = 0).
struct ModalDecomposition {
  Alphabet x_alphabet;
  Alphabet y_alphabet;
  Eigen::VectorXd sigmas;  // descending, size K
  Eigen::MatrixXd f_star;  // K x |X|
  Eigen::MatrixXd g_star;  // K x |Y|
  double rho = 0.0;

  std::size_t k() const { return static_cast<std::size_t>(sigmas.size()); }
};

constexpr double kDefaultSigmaTol = 1e-10;

// Computes the decomposition through the SVD of
//   B~(x,y) = (P(x,y) - P_X(x) P_Y(y)) / sqrt(P_X(x) P_Y(y)),
// which carries exactly the non-constant modes. Singular values below
// sigma_tol are discarded; K = 0 (independence) is a valid result.
// Deterministic: each mode is sign-flipped so that the first f* entry with
// magnitude > 1e-9 is positive.
ModalDecomposition decompose(const JointDistribution& joint, double sigma_tol = kDefaultSigmaTol);

// sigma_1, or 0 under independence. Always in [0, 1].
double maximal_correlation(const JointDistribution& joint);

// The K-dimensional feature x -> (f*_1(x),...,f*_K(x)).
// Throws EmptyFeatureError when K = 0.
Feature f_star_feature(const ModalDecomposition& decomposition);

}  // namespace corrkernel

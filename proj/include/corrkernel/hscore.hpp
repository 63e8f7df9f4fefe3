#pragma once

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"
#include "corrkernel/kernel.hpp"

namespace corrkernel {

// H-score of a feature:
//   H(f) = 1/2 E_Y[ || Lambda_f^{-1/2} E[f~(X)|Y] ||^2 ],
// where f~ is the centered feature and Lambda_f = E[f f^T] is
// pseudo-inverted when singular (relative cutoff 1e-10), so redundant
// dimensions contribute nothing. Centering happens internally.
double h_score(const Feature& f, const JointDistribution& joint);

// The maximum of the H-score over all features: 1/2 sum_i sigma_i^2.
double h_score_max(const JointDistribution& joint);

// H-score of a projection kernel through its Gram table:
//   1/2 ( E_{P_XX'}[k] - E_{P_X P_X'}[k] ).
// Meaningful when k is the projection kernel of some subspace.
double h_score_kernel(const Kernel& kernel, const JointDistribution& joint);

// H-score of a subspace for binary Y: (rho^2 / 2) ||Pi(f*|G)||^2. Equals
// max_{f in G} H(f) and H(Pi(f*|G)).
double subspace_h_score_binary(const FeatureSubspace& subspace, const JointDistribution& joint);

}  // namespace corrkernel

#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"
#include "corrkernel/kernel.hpp"

namespace corrkernel {

// A parameterized family of positive distributions on a finite alphabet.
// An analytic score evaluator is optional; without one, scores come from
// central finite differences of log probabilities.
class ParametricFamily {
 public:
  using ProbFn = std::function<double(std::size_t x_index, const Eigen::VectorXd& theta)>;
  using ScoreFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd& theta)>;  // m x |X|

  ParametricFamily(Alphabet alphabet, int param_dim, ProbFn prob, ScoreFn analytic_score = {});

  // pi(x; theta) proportional to base(x) exp(<theta, stats(x)>), with the
  // analytic score stats(x) - E_theta[stats]. sufficient_stats is m x |X|.
  static ParametricFamily exponential_tilt(Alphabet alphabet, Eigen::VectorXd base,
                                           Eigen::MatrixXd sufficient_stats);

  const Alphabet& alphabet() const { return alphabet_; }
  int param_dim() const { return param_dim_; }
  bool has_analytic_score() const { return static_cast<bool>(score_); }

  double prob(std::size_t x_index, const Eigen::VectorXd& theta) const;

  // The full distribution at theta; validates positivity and unit mass.
  Eigen::VectorXd distribution(const Eigen::VectorXd& theta) const;

  Eigen::MatrixXd analytic_score(const Eigen::VectorXd& theta) const;

 private:
  Alphabet alphabet_;
  int param_dim_;
  ProbFn prob_;
  ScoreFn score_;
};

struct ScoreFeature {
  Feature feature;        // m x |X|
  Eigen::VectorXd theta0;
  double step = 0.0;      // finite-difference step; 0 when analytic
};

// s(x) = d/dtheta log pi(x;theta) at theta0: analytic when the family
// provides it (and use_analytic), otherwise central differences with step h.
ScoreFeature score_function(const ParametricFamily& family, const Eigen::VectorXd& theta0,
                            double h = 1e-5, bool use_analytic = true);

// Projection kernel of span{s} under weights px: s(x)^T Lambda_s^+ s(x').
// A zero score yields the zero kernel (with a warning).
Kernel fisher_kernel(const ParametricFamily& family, const Eigen::VectorXd& theta0,
                     const Eigen::VectorXd& px, double h = 1e-5);

// P(x,y) = P_Y(y) pi(x; theta_y).
JointDistribution generate_mixture(const ParametricFamily& family,
                                   const std::vector<Eigen::VectorXd>& theta_per_y,
                                   const Alphabet& y_alphabet, const Eigen::VectorXd& py);

struct Theorem3Row {
  double eps = 0.0;
  double e1 = 0.0;  // max |P - P_X P_Y (1 + <s, theta~_y>)|
  double e2 = 0.0;  // max |k_s - k*|; NaN when k* is undefined
  double e3 = 0.0;  // |H(s) - I(X;Y)|
  bool kernel_defined = true;
  double ratio1 = 0.0;  // e(eps/2) / e(eps); 0 when the numerator vanishes
  double ratio2 = 0.0;
  double ratio3 = 0.0;
};

struct Theorem3Report {
  std::vector<Theorem3Row> rows;  // one per requested epsilon, input order
};

// theta_y = eps * u_y per epsilon; each row also carries the e(eps/2)/e(eps)
// ratios (the halved points are evaluated internally).
Theorem3Report theorem3_report(const ParametricFamily& family,
                               const std::vector<Eigen::VectorXd>& directions,
                               const std::vector<double>& epsilons, const Alphabet& y_alphabet,
                               const Eigen::VectorXd& py);

}  // namespace corrkernel

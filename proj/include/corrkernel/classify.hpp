#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"
#include "corrkernel/kernel.hpp"

namespace corrkernel {

// Hyperplane parameters for an SVM trained on a d-dimensional feature.
struct SvmModel {
  Eigen::VectorXd w;
  double b = 0.0;
  double lambda = 0.0;  // > 0
};

struct LrModel {
  Eigen::VectorXd w;
  double b = 0.0;
};

// +1 / -1 value of a binary class label; accepts "1", "+1", "-1".
int label_sign(const std::string& y_label);

// True iff Y has exactly the labels {-1,+1} and P_Y(-1) = P_Y(+1) = 1/2
// within tolerance.
bool check_balanced_binary(const JointDistribution& joint, double tol = 1e-9);

// max(0, 1 - y z).
double hinge_loss(int y, double z);

// L_SVM = E[hinge(Y, <w,f(X)> + b)] + (lambda/2) ||w||^2.
double svm_loss(const Feature& f, const JointDistribution& joint, const SvmModel& model);

// lambda_T = M ||E[f(X)Y]|| with M = max_x ||f~(x)|| over the support.
// At or above this threshold the SVM optimum has a closed form.
double lambda_threshold(const Feature& f, const JointDistribution& joint);

// w = E[f(X)Y] / lambda, b = -<w, E[f(X)]>; valid for lambda >= lambda_T.
SvmModel svm_closed_form(const Feature& f, const JointDistribution& joint, double lambda);

struct SvmSolveOptions {
  // Smoothed-hinge continuation: the hinge is replaced by a Huber hinge
  // with width mu, minimized by damped Newton, and mu is driven from
  // mu_initial down to mu_final with warm starts. The returned loss is
  // within ~mu_final/2 + grad slack of the true minimum.
  double mu_initial = 1e-2;
  double mu_final = 1e-10;
  int max_iterations = 2000;  // total Newton iteration budget
  double grad_tol = 1e-12;
};

struct SvmSolveResult {
  SvmModel model;
  double loss = 0.0;  // true (unsmoothed) objective at the returned point
  bool converged = false;
  double grad_norm = 0.0;  // of the final smoothed objective
  int iterations = 0;
};

// Independent numerical minimizer of L_SVM; never uses the closed form.
// Non-convergence is reported through the result, never silently.
SvmSolveResult svm_solve_generic(const Feature& f, const JointDistribution& joint, double lambda,
                                 const SvmSolveOptions& options = {});

// sign(<w,f(x)> + b) per symbol, with sign(0) = +1.
std::vector<int> svm_predict(const Feature& f, const SvmModel& model);

// The two closed-form score routes of the kernel SVM decision.
struct KernelSvmScores {
  Eigen::VectorXd tau_f_star;  // [tau(f*)](x), tau from the centered kernel
  Eigen::VectorXd e_kt_y;      // E[k~(X,x) Y]
  bool has_f_star = false;     // false under independence
};

KernelSvmScores kernel_svm_scores(const Kernel& kernel, const JointDistribution& joint);

// Kernel SVM prediction sign([tau(f*)](x)); falls back to the
// E[k~(X,x)Y] score under independence (then constant +1).
std::vector<int> kernel_svm_predict(const Kernel& kernel, const JointDistribution& joint);

// argmax_y P_{Y|X}(y|x) per symbol, ties broken by y-alphabet order.
std::vector<std::string> map_predict(const JointDistribution& joint);

struct LrFitOptions {
  int max_iterations = 200000;
  double grad_tol = 1e-8;
  double weight_cap = 1e3;  // separability guard on ||w||
};

struct LrFitResult {
  LrModel model;
  double loss = 0.0;
  bool converged = false;
  double grad_norm = 0.0;
  int iterations = 0;
  bool capped = false;  // separability cap triggered
};

// Full-batch gradient descent with backtracking line search on
// L_LR = -E[log sigmoid(Y (<w,f(X)> + b))].
LrFitResult logistic_fit(const Feature& f, const JointDistribution& joint,
                         const LrFitOptions& options = {});

// L_LR evaluated at a model; exposed for the finite-difference oracle.
double logistic_loss(const Feature& f, const JointDistribution& joint, const LrModel& model);
Eigen::VectorXd logistic_gradient(const Feature& f, const JointDistribution& joint,
                                  const LrModel& model);  // (d+1): d/dw then d/db

struct SvmLrComparison {
  double w_gap = 0.0;      // ||w_LR - 2 lambda w_SVM||
  double b_gap = 0.0;      // |b_LR - 2 lambda b_SVM|
  double agreement = 0.0;  // fraction of symbols with equal predictions
  SvmModel svm;
  LrModel lr;
};

// Requires a whitened feature (Lambda_{f~} = I within 1e-8).
SvmLrComparison compare_svm_lr(const Feature& f, const JointDistribution& joint, double lambda);

struct Corollary1Report {
  double loss = 0.0;   // L*_SVM at lambda >= lambda_T
  double lower = 0.0;  // 1 - (r_max / lambda) H(f~)
  double upper = 0.0;  // 1 - (r_min / lambda) H(f~)
  double r_min = 0.0;  // extreme positive eigenvalues of Lambda_{f~}
  double r_max = 0.0;
  double h_centered = 0.0;  // H(f~)
  bool whitened = false;    // Lambda_{f~} = I within 1e-8
};

Corollary1Report corollary1_check(const Feature& f, const JointDistribution& joint, double lambda);

}  // namespace corrkernel

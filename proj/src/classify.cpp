#include "corrkernel/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corrkernel/errors.hpp"
#include "corrkernel/linalg.hpp"
#include "corrkernel/log.hpp"
#include "corrkernel/modal.hpp"

namespace corrkernel {

namespace {

void require_feature_matches(const Feature& f, const JointDistribution& joint) {
  if (f.alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("feature and distribution alphabets differ");
  }
}

void require_balanced(const JointDistribution& joint, const char* what) {
  if (!check_balanced_binary(joint)) {
    throw PreconditionError(std::string(what) + " requires a balanced binary distribution");
  }
}

// +1/-1 per y-symbol, in alphabet order.
Eigen::VectorXd y_signs(const JointDistribution& joint) {
  Eigen::VectorXd s(joint.ny());
  for (std::size_t j = 0; j < joint.ny(); ++j) {
    s(static_cast<Eigen::Index>(j)) = label_sign(joint.y_alphabet().label(j));
  }
  return s;
}

// E[f(X) Y] for binary labels.
Eigen::VectorXd expected_fy(const Feature& f, const JointDistribution& joint) {
  return f.values() * (joint.pxy() * y_signs(joint));
}

// Probability atoms of the joint flattened for the optimizers.
struct Atoms {
  Eigen::MatrixXd phi;   // d x n, feature vectors
  Eigen::VectorXd sign;  // n, +1/-1
  Eigen::VectorXd mass;  // n, P(x,y) > 0
};

Atoms flatten(const Feature& f, const JointDistribution& joint) {
  const Eigen::VectorXd signs = y_signs(joint);
  std::vector<Eigen::Index> xs, ys;
  for (Eigen::Index i = 0; i < joint.pxy().rows(); ++i) {
    for (Eigen::Index j = 0; j < joint.pxy().cols(); ++j) {
      if (joint.pxy()(i, j) > 0.0) {
        xs.push_back(i);
        ys.push_back(j);
      }
    }
  }
  Atoms atoms;
  const auto n = static_cast<Eigen::Index>(xs.size());
  atoms.phi.resize(f.values().rows(), n);
  atoms.sign.resize(n);
  atoms.mass.resize(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    atoms.phi.col(a) = f.values().col(xs[static_cast<std::size_t>(a)]);
    atoms.sign(a) = signs(ys[static_cast<std::size_t>(a)]);
    atoms.mass(a) = joint.pxy()(xs[static_cast<std::size_t>(a)], ys[static_cast<std::size_t>(a)]);
  }
  return atoms;
}

}  // namespace

int label_sign(const std::string& y_label) {
  if (y_label == "1" || y_label == "+1") return 1;
  if (y_label == "-1") return -1;
  throw InvalidInputError("label is not a +/-1 class label: " + y_label);
}

bool check_balanced_binary(const JointDistribution& joint, double tol) {
  if (joint.ny() != 2) return false;
  int s0, s1;
  try {
    s0 = label_sign(joint.y_alphabet().label(0));
    s1 = label_sign(joint.y_alphabet().label(1));
  } catch (const InvalidInputError&) {
    return false;
  }
  if (s0 + s1 != 0) return false;
  return std::abs(joint.py()(0) - 0.5) <= tol && std::abs(joint.py()(1) - 0.5) <= tol;
}

double hinge_loss(int y, double z) {
  if (y != 1 && y != -1) throw InvalidInputError("hinge label must be +1 or -1");
  return std::max(0.0, 1.0 - y * z);
}

double svm_loss(const Feature& f, const JointDistribution& joint, const SvmModel& model) {
  require_feature_matches(f, joint);
  require_balanced(joint, "svm_loss");
  const Eigen::VectorXd signs = y_signs(joint);
  double hinge = 0.0;
  for (Eigen::Index i = 0; i < joint.pxy().rows(); ++i) {
    const double z = model.w.dot(f.values().col(i)) + model.b;
    for (Eigen::Index j = 0; j < joint.pxy().cols(); ++j) {
      hinge += joint.pxy()(i, j) * std::max(0.0, 1.0 - signs(j) * z);
    }
  }
  return hinge + 0.5 * model.lambda * model.w.squaredNorm();
}

double lambda_threshold(const Feature& f, const JointDistribution& joint) {
  require_feature_matches(f, joint);
  require_balanced(joint, "lambda_threshold");
  const Feature centered = center(f, joint.px());
  double m = 0.0;
  for (Eigen::Index i = 0; i < centered.values().cols(); ++i) {
    m = std::max(m, centered.values().col(i).norm());
  }
  return m * expected_fy(f, joint).norm();
}

SvmModel svm_closed_form(const Feature& f, const JointDistribution& joint, double lambda) {
  require_feature_matches(f, joint);
  require_balanced(joint, "svm_closed_form");
  if (lambda <= 0.0) throw PreconditionError("lambda must be positive");
  const double threshold = lambda_threshold(f, joint);
  if (lambda < threshold - 1e-12) {
    throw PreconditionError("closed form needs lambda >= lambda_T; use the generic solver");
  }
  SvmModel model;
  model.lambda = lambda;
  model.w = expected_fy(f, joint) / lambda;
  model.b = -model.w.dot(f.values() * joint.px());
  return model;
}

// ---------------------------------------------------------------------------
// Generic SVM solver.
//
// The hinge is replaced by a Huber hinge of width mu
//   h_mu(m) = 0            for m >= 1
//           = (1-m)^2/2mu  for 1-mu < m < 1
//           = 1-m-mu/2     for m <= 1-mu,
// which satisfies 0 <= hinge - h_mu <= mu/2, so minimizing the smoothed
// objective to stationarity leaves at most mu/2 suboptimality in the true
// objective. Each smoothing level is solved by damped Newton with Armijo
// backtracking, warm-starting the next level of the mu ladder.
// ---------------------------------------------------------------------------

namespace {

struct SmoothedEval {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

SmoothedEval evaluate_smoothed(const Atoms& atoms, double lambda, double mu,
                               const Eigen::VectorXd& theta, bool with_hessian) {
  const Eigen::Index d = atoms.phi.rows();
  const Eigen::VectorXd w = theta.head(d);
  const double b = theta(d);

  SmoothedEval eval;
  eval.value = 0.5 * lambda * w.squaredNorm();
  eval.grad = Eigen::VectorXd::Zero(d + 1);
  eval.grad.head(d) = lambda * w;
  if (with_hessian) {
    eval.hess = Eigen::MatrixXd::Zero(d + 1, d + 1);
    eval.hess.topLeftCorner(d, d) = lambda * Eigen::MatrixXd::Identity(d, d);
  }

  for (Eigen::Index a = 0; a < atoms.phi.cols(); ++a) {
    const double margin = atoms.sign(a) * (w.dot(atoms.phi.col(a)) + b);
    double h, dh, ddh;
    if (margin >= 1.0) {
      h = dh = ddh = 0.0;
    } else if (margin <= 1.0 - mu) {
      h = 1.0 - margin - 0.5 * mu;
      dh = -1.0;
      ddh = 0.0;
    } else {
      const double t = 1.0 - margin;
      h = t * t / (2.0 * mu);
      dh = -t / mu;
      ddh = 1.0 / mu;
    }
    eval.value += atoms.mass(a) * h;
    if (dh != 0.0 || ddh != 0.0) {
      Eigen::VectorXd z(d + 1);
      z.head(d) = atoms.sign(a) * atoms.phi.col(a);
      z(d) = atoms.sign(a);
      eval.grad += atoms.mass(a) * dh * z;
      if (with_hessian && ddh != 0.0) {
        eval.hess += atoms.mass(a) * ddh * z * z.transpose();
      }
    }
  }
  return eval;
}

double smoothed_value(const Atoms& atoms, double lambda, double mu, const Eigen::VectorXd& theta) {
  const Eigen::Index d = atoms.phi.rows();
  const Eigen::VectorXd w = theta.head(d);
  const double b = theta(d);
  double value = 0.5 * lambda * w.squaredNorm();
  for (Eigen::Index a = 0; a < atoms.phi.cols(); ++a) {
    const double margin = atoms.sign(a) * (w.dot(atoms.phi.col(a)) + b);
    if (margin >= 1.0) continue;
    if (margin <= 1.0 - mu) {
      value += atoms.mass(a) * (1.0 - margin - 0.5 * mu);
    } else {
      const double t = 1.0 - margin;
      value += atoms.mass(a) * t * t / (2.0 * mu);
    }
  }
  return value;
}

}  // namespace

SvmSolveResult svm_solve_generic(const Feature& f, const JointDistribution& joint, double lambda,
                                 const SvmSolveOptions& options) {
  require_feature_matches(f, joint);
  require_balanced(joint, "svm_solve_generic");
  if (lambda <= 0.0) throw PreconditionError("lambda must be positive");

  const Atoms atoms = flatten(f, joint);
  const Eigen::Index d = atoms.phi.rows();
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d + 1);

  SvmSolveResult result;
  int iterations = 0;
  double grad_norm = std::numeric_limits<double>::infinity();

  for (double mu = options.mu_initial; mu >= options.mu_final * (1.0 - 1e-12); mu /= 10.0) {
    bool stage_done = false;
    while (!stage_done && iterations < options.max_iterations) {
      SmoothedEval eval = evaluate_smoothed(atoms, lambda, mu, theta, true);
      grad_norm = eval.grad.norm();
      if (grad_norm <= options.grad_tol) {
        stage_done = true;
        break;
      }
      ++iterations;

      // Damped Newton direction; the ridge keeps the system solvable when
      // no atom sits in the quadratic zone (flat b curvature).
      const double ridge = 1e-12 * std::max(1.0, eval.hess.diagonal().maxCoeff());
      Eigen::MatrixXd h = eval.hess;
      h.diagonal().array() += ridge;
      Eigen::VectorXd step = h.ldlt().solve(-eval.grad);

      const double slope = eval.grad.dot(step);
      if (!(slope < 0.0)) {
        stage_done = true;  // numerically stationary
        break;
      }
      double t = 1.0;
      bool accepted = false;
      for (int back = 0; back < 70; ++back) {
        const double candidate_value = smoothed_value(atoms, lambda, mu, theta + t * step);
        if (candidate_value <= eval.value + 1e-4 * t * slope) {
          theta += t * step;
          accepted = true;
          break;
        }
        t *= 0.5;
      }
      if (!accepted) {
        stage_done = true;  // cannot improve at this precision
      }
    }
    if (iterations >= options.max_iterations) break;
  }

  result.model.w = theta.head(d);
  result.model.b = theta(d);
  result.model.lambda = lambda;
  result.loss = svm_loss(f, joint, result.model);
  result.grad_norm = grad_norm;
  result.iterations = iterations;
  result.converged = iterations < options.max_iterations;
  if (!result.converged) {
    log_error("svm_solve_generic: iteration budget exhausted, gradient norm " +
              std::to_string(grad_norm));
  }
  return result;
}

std::vector<int> svm_predict(const Feature& f, const SvmModel& model) {
  std::vector<int> out;
  out.reserve(f.alphabet().size());
  for (Eigen::Index x = 0; x < f.values().cols(); ++x) {
    const double z = model.w.dot(f.values().col(x)) + model.b;
    out.push_back(z >= 0.0 ? 1 : -1);
  }
  return out;
}

KernelSvmScores kernel_svm_scores(const Kernel& kernel, const JointDistribution& joint) {
  if (kernel.alphabet() != joint.x_alphabet()) {
    throw AlphabetMismatchError("kernel and distribution alphabets differ");
  }
  require_balanced(joint, "kernel_svm_scores");

  const Kernel centered = center_kernel(kernel, joint.px());
  KernelSvmScores scores;
  scores.e_kt_y = centered.gram() * (joint.pxy() * y_signs(joint));

  const ModalDecomposition d = decompose(joint);
  scores.has_f_star = d.k() >= 1;
  if (scores.has_f_star) {
    Eigen::VectorXd fs = d.f_star.row(0).transpose();
    scores.tau_f_star = centered.gram() * joint.px().cwiseProduct(fs);
  } else {
    scores.tau_f_star = Eigen::VectorXd::Zero(joint.pxy().rows());
  }
  return scores;
}

std::vector<int> kernel_svm_predict(const Kernel& kernel, const JointDistribution& joint) {
  const KernelSvmScores scores = kernel_svm_scores(kernel, joint);
  const Eigen::VectorXd& s = scores.has_f_star ? scores.tau_f_star : scores.e_kt_y;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.size()));
  for (Eigen::Index x = 0; x < s.size(); ++x) {
    out.push_back(s(x) >= 0.0 ? 1 : -1);
  }
  return out;
}

std::vector<std::string> map_predict(const JointDistribution& joint) {
  const Eigen::MatrixXd cond = joint.conditional_y_given_x();
  std::vector<std::string> out;
  out.reserve(joint.nx());
  for (Eigen::Index x = 0; x < cond.rows(); ++x) {
    Eigen::Index best = 0;
    for (Eigen::Index y = 1; y < cond.cols(); ++y) {
      if (cond(x, y) > cond(x, best)) best = y;  // ties keep alphabet order
    }
    out.push_back(joint.y_alphabet().label(static_cast<std::size_t>(best)));
  }
  return out;
}

double logistic_loss(const Feature& f, const JointDistribution& joint, const LrModel& model) {
  require_feature_matches(f, joint);
  const Eigen::VectorXd signs = y_signs(joint);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < joint.pxy().rows(); ++i) {
    const double z = model.w.dot(f.values().col(i)) + model.b;
    for (Eigen::Index j = 0; j < joint.pxy().cols(); ++j) {
      const double m = signs(j) * z;
      // softplus(-m) = log(1 + exp(-m)), evaluated stably.
      loss += joint.pxy()(i, j) * (m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m)));
    }
  }
  return loss;
}

Eigen::VectorXd logistic_gradient(const Feature& f, const JointDistribution& joint,
                                  const LrModel& model) {
  require_feature_matches(f, joint);
  const Eigen::VectorXd signs = y_signs(joint);
  const Eigen::Index d = f.values().rows();
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(d + 1);
  for (Eigen::Index i = 0; i < joint.pxy().rows(); ++i) {
    const double z = model.w.dot(f.values().col(i)) + model.b;
    for (Eigen::Index j = 0; j < joint.pxy().cols(); ++j) {
      const double m = signs(j) * z;
      const double sig = 1.0 / (1.0 + std::exp(m));  // sigmoid(-m)
      grad.head(d) -= joint.pxy()(i, j) * sig * signs(j) * f.values().col(i);
      grad(d) -= joint.pxy()(i, j) * sig * signs(j);
    }
  }
  return grad;
}

LrFitResult logistic_fit(const Feature& f, const JointDistribution& joint,
                         const LrFitOptions& options) {
  require_feature_matches(f, joint);
  require_balanced(joint, "logistic_fit");

  const Eigen::Index d = f.values().rows();
  LrModel model{Eigen::VectorXd::Zero(d), 0.0};
  double loss = logistic_loss(f, joint, model);
  double step = 1.0;
  int cap_hits = 0;

  LrFitResult result;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    const Eigen::VectorXd grad = logistic_gradient(f, joint, model);
    result.grad_norm = grad.norm();
    if (result.grad_norm <= options.grad_tol) {
      result.converged = true;
      break;
    }

    // Backtracking line search with step doubling across iterations.
    step = std::min(step * 2.0, 1e6);
    bool accepted = false;
    for (int back = 0; back < 80; ++back) {
      LrModel candidate{model.w - step * grad.head(d), model.b - step * grad(d)};
      const double candidate_loss = logistic_loss(f, joint, candidate);
      if (candidate_loss <= loss - 1e-4 * step * grad.squaredNorm()) {
        model = candidate;
        loss = candidate_loss;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // stalled at numerical precision

    if (model.w.norm() > options.weight_cap) {
      model.w *= options.weight_cap / model.w.norm();
      loss = logistic_loss(f, joint, model);
      if (++cap_hits == 1) {
        log_error("logistic_fit: ||w|| cap triggered, data may be separable");
      }
      result.capped = true;
      if (cap_hits > 100) break;
    }
  }
  result.model = model;
  result.loss = loss;
  result.iterations = it;
  if (!result.converged) {
    result.grad_norm = logistic_gradient(f, joint, model).norm();
    result.converged = result.grad_norm <= options.grad_tol;
  }
  return result;
}

SvmLrComparison compare_svm_lr(const Feature& f, const JointDistribution& joint, double lambda) {
  require_feature_matches(f, joint);
  require_balanced(joint, "compare_svm_lr");
  const Eigen::MatrixXd cov = second_moment(center(f, joint.px()), joint.px());
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(cov.rows(), cov.cols());
  if ((cov - eye).cwiseAbs().maxCoeff() > 1e-8) {
    throw PreconditionError("compare_svm_lr requires a whitened feature (Lambda_{f~} = I)");
  }

  SvmLrComparison report;
  if (lambda >= lambda_threshold(f, joint)) {
    report.svm = svm_closed_form(f, joint, lambda);
  } else {
    report.svm = svm_solve_generic(f, joint, lambda).model;
  }
  report.lr = logistic_fit(f, joint).model;

  report.w_gap = (report.lr.w - 2.0 * lambda * report.svm.w).norm();
  report.b_gap = std::abs(report.lr.b - 2.0 * lambda * report.svm.b);

  const std::vector<int> svm_pred = svm_predict(f, report.svm);
  int agree = 0;
  for (Eigen::Index x = 0; x < f.values().cols(); ++x) {
    const double z = report.lr.w.dot(f.values().col(x)) + report.lr.b;
    const int lr_pred = z >= 0.0 ? 1 : -1;
    if (lr_pred == svm_pred[static_cast<std::size_t>(x)]) ++agree;
  }
  report.agreement = static_cast<double>(agree) / static_cast<double>(f.values().cols());
  return report;
}

Corollary1Report corollary1_check(const Feature& f, const JointDistribution& joint, double lambda) {
  require_feature_matches(f, joint);
  require_balanced(joint, "corollary1_check");
  const double threshold = lambda_threshold(f, joint);
  if (lambda < threshold - 1e-12) {
    throw PreconditionError("corollary1_check requires lambda >= lambda_T");
  }

  Corollary1Report report;
  report.loss = svm_loss(f, joint, svm_closed_form(f, joint, lambda));

  const Feature centered = center(f, joint.px());
  const Eigen::MatrixXd cov = second_moment(centered, joint.px());
  const auto eig = linalg::symmetric_eigen(cov);
  const double max_eig = eig.values.size() > 0 ? eig.values.maxCoeff() : 0.0;
  const double cutoff = 1e-10 * max_eig;
  double r_min = 0.0, r_max = 0.0;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i) {
    if (eig.values(i) > cutoff && eig.values(i) > 0.0) {
      if (r_min == 0.0) r_min = eig.values(i);  // ascending: first hit is the smallest
      r_max = eig.values(i);
    }
  }
  report.r_min = r_min;
  report.r_max = r_max;
  report.h_centered = h_score(centered, joint);
  report.lower = 1.0 - report.r_max / lambda * report.h_centered;
  report.upper = 1.0 - report.r_min / lambda * report.h_centered;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(cov.rows(), cov.cols());
  report.whitened = (cov - eye).cwiseAbs().maxCoeff() <= 1e-8;
  return report;
}

}  // namespace corrkernel

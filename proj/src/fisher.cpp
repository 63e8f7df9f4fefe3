#include "corrkernel/fisher.hpp"

#include <cmath>
#include <limits>

#include "corrkernel/errors.hpp"
#include "corrkernel/hscore.hpp"
#include "corrkernel/linalg.hpp"
#include "corrkernel/log.hpp"
#include "corrkernel/modal.hpp"

namespace corrkernel {

ParametricFamily::ParametricFamily(Alphabet alphabet, int param_dim, ProbFn prob,
                                   ScoreFn analytic_score)
    : alphabet_(std::move(alphabet)),
      param_dim_(param_dim),
      prob_(std::move(prob)),
      score_(std::move(analytic_score)) {
  if (param_dim_ < 1) throw InvalidInputError("param_dim must be at least 1");
  if (!prob_) throw InvalidInputError("probability evaluator is required");
}

ParametricFamily ParametricFamily::exponential_tilt(Alphabet alphabet, Eigen::VectorXd base,
                                                    Eigen::MatrixXd sufficient_stats) {
  const auto n = static_cast<Eigen::Index>(alphabet.size());
  if (base.size() != n) throw InvalidInputError("base distribution length mismatch");
  if (sufficient_stats.cols() != n) throw InvalidInputError("sufficient_stats width mismatch");
  if ((base.array() <= 0.0).any()) {
    throw InvalidInputError("exponential tilt needs a strictly positive base distribution");
  }
  const double mass = base.sum();
  if (std::abs(mass - 1.0) > 1e-9) throw InvalidInputError("base distribution mass is not 1");

  const int m = static_cast<int>(sufficient_stats.rows());
  auto weights = [base, sufficient_stats](const Eigen::VectorXd& theta) -> Eigen::VectorXd {
    return base.array() * (sufficient_stats.transpose() * theta).array().exp();
  };
  auto prob = [weights](std::size_t x, const Eigen::VectorXd& theta) -> double {
    const Eigen::VectorXd w = weights(theta);
    return w(static_cast<Eigen::Index>(x)) / w.sum();
  };
  // s_theta(x) = t(x) - E_theta[t(X)].
  auto score = [weights, sufficient_stats](const Eigen::VectorXd& theta) -> Eigen::MatrixXd {
    Eigen::VectorXd w = weights(theta);
    w /= w.sum();
    const Eigen::VectorXd mean = sufficient_stats * w;
    return sufficient_stats.colwise() - mean;
  };
  return ParametricFamily(std::move(alphabet), m, prob, score);
}

double ParametricFamily::prob(std::size_t x_index, const Eigen::VectorXd& theta) const {
  if (theta.size() != param_dim_) throw InvalidInputError("theta dimension mismatch");
  return prob_(x_index, theta);
}

Eigen::VectorXd ParametricFamily::distribution(const Eigen::VectorXd& theta) const {
  Eigen::VectorXd p(static_cast<Eigen::Index>(alphabet_.size()));
  for (std::size_t x = 0; x < alphabet_.size(); ++x) {
    const double v = prob(x, theta);
    if (!(v > 0.0)) {
      throw DomainError("family probability is not positive at symbol " + alphabet_.label(x));
    }
    p(static_cast<Eigen::Index>(x)) = v;
  }
  if (std::abs(p.sum() - 1.0) > 1e-9) {
    throw DomainError("family probabilities do not sum to 1 at the probed theta");
  }
  return p;
}

Eigen::MatrixXd ParametricFamily::analytic_score(const Eigen::VectorXd& theta) const {
  if (!score_) throw InvalidStateError("family has no analytic score evaluator");
  return score_(theta);
}

ScoreFeature score_function(const ParametricFamily& family, const Eigen::VectorXd& theta0,
                            double h, bool use_analytic) {
  if (theta0.size() != family.param_dim()) throw InvalidInputError("theta0 dimension mismatch");
  family.distribution(theta0);  // validate the expansion point

  if (use_analytic && family.has_analytic_score()) {
    return ScoreFeature{Feature(family.alphabet(), family.analytic_score(theta0)), theta0, 0.0};
  }

  if (!(h > 0.0)) throw InvalidInputError("finite-difference step must be positive");
  const auto n = static_cast<Eigen::Index>(family.alphabet().size());
  Eigen::MatrixXd values(family.param_dim(), n);
  for (int i = 0; i < family.param_dim(); ++i) {
    Eigen::VectorXd up = theta0, down = theta0;
    up(i) += h;
    down(i) -= h;
    const Eigen::VectorXd p_up = family.distribution(up);
    const Eigen::VectorXd p_down = family.distribution(down);
    values.row(i) = ((p_up.array().log() - p_down.array().log()) / (2.0 * h)).transpose();
  }
  return ScoreFeature{Feature(family.alphabet(), values), theta0, h};
}

Kernel fisher_kernel(const ParametricFamily& family, const Eigen::VectorXd& theta0,
                     const Eigen::VectorXd& px, double h) {
  const ScoreFeature score = score_function(family, theta0, h);
  const Eigen::MatrixXd& s = score.feature.values();
  const Eigen::MatrixXd lambda = second_moment(score.feature, px);
  if (lambda.cwiseAbs().maxCoeff() < 1e-14) {
    log_error("fisher_kernel: score function is numerically zero, returning the zero kernel");
    return Kernel(family.alphabet(), Eigen::MatrixXd::Zero(s.cols(), s.cols()));
  }
  return Kernel(family.alphabet(), s.transpose() * linalg::pseudo_inverse_psd(lambda) * s);
}

JointDistribution generate_mixture(const ParametricFamily& family,
                                   const std::vector<Eigen::VectorXd>& theta_per_y,
                                   const Alphabet& y_alphabet, const Eigen::VectorXd& py) {
  if (theta_per_y.size() != y_alphabet.size() ||
      static_cast<std::size_t>(py.size()) != y_alphabet.size()) {
    throw InvalidInputError("per-class parameter list must match the y-alphabet");
  }
  Eigen::MatrixXd pxy(static_cast<Eigen::Index>(family.alphabet().size()),
                      static_cast<Eigen::Index>(y_alphabet.size()));
  for (std::size_t y = 0; y < y_alphabet.size(); ++y) {
    pxy.col(static_cast<Eigen::Index>(y)) =
        py(static_cast<Eigen::Index>(y)) * family.distribution(theta_per_y[y]);
  }
  return JointDistribution(family.alphabet(), y_alphabet, pxy);
}

Theorem3Report theorem3_report(const ParametricFamily& family,
                               const std::vector<Eigen::VectorXd>& directions,
                               const std::vector<double>& epsilons, const Alphabet& y_alphabet,
                               const Eigen::VectorXd& py) {
  const Eigen::VectorXd theta0 = Eigen::VectorXd::Zero(family.param_dim());
  const ScoreFeature score = score_function(family, theta0);
  const Eigen::MatrixXd& s = score.feature.values();

  struct Errors {
    double e1, e2, e3;
    bool kernel_defined;
  };
  auto evaluate = [&](double eps) -> Errors {
    std::vector<Eigen::VectorXd> thetas;
    Eigen::VectorXd theta_mean = Eigen::VectorXd::Zero(family.param_dim());
    for (std::size_t y = 0; y < directions.size(); ++y) {
      thetas.push_back(eps * directions[y]);
      theta_mean += py(static_cast<Eigen::Index>(y)) * thetas.back();
    }
    const JointDistribution joint = generate_mixture(family, thetas, y_alphabet, py);

    // e1: residual of P = P_X P_Y (1 + <s(x), theta~_y>).
    double e1 = 0.0;
    for (Eigen::Index i = 0; i < joint.pxy().rows(); ++i) {
      for (Eigen::Index j = 0; j < joint.pxy().cols(); ++j) {
        const Eigen::VectorXd centered_theta = thetas[static_cast<std::size_t>(j)] - theta_mean;
        const double approx =
            joint.px()(i) * joint.py()(j) * (1.0 + s.col(i).dot(centered_theta));
        e1 = std::max(e1, std::abs(joint.pxy()(i, j) - approx));
      }
    }

    // e2: Fisher kernel against the maximal correlation kernel.
    double e2 = std::numeric_limits<double>::quiet_NaN();
    bool kernel_defined = decompose(joint).k() >= 1;
    if (kernel_defined) {
      const Kernel ks = fisher_kernel(family, theta0, joint.px());
      const Kernel kstar = maximal_correlation_kernel(joint);
      e2 = (ks.gram() - kstar.gram()).cwiseAbs().maxCoeff();
    }

    // e3: H-score of the score feature against mutual information.
    const double e3 = std::abs(h_score(score.feature, joint) - joint.mutual_information());
    return {e1, e2, e3, kernel_defined};
  };

  Theorem3Report report;
  for (double eps : epsilons) {
    const Errors full = evaluate(eps);
    const Errors half = evaluate(0.5 * eps);
    Theorem3Row row;
    row.eps = eps;
    row.e1 = full.e1;
    row.e2 = full.e2;
    row.e3 = full.e3;
    row.kernel_defined = full.kernel_defined;
    auto ratio = [](double num, double den) {
      if (std::isnan(num) || std::isnan(den)) return std::numeric_limits<double>::quiet_NaN();
      if (num <= 1e-15) return 0.0;  // both at the noise floor: decay is trivially satisfied
      return num / den;
    };
    row.ratio1 = ratio(half.e1, full.e1);
    row.ratio2 = ratio(half.e2, full.e2);
    row.ratio3 = ratio(half.e3, full.e3);
    if (!full.kernel_defined) {
      log_info("theorem3_report: maximal correlation kernel undefined at eps = " +
               std::to_string(eps));
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace corrkernel

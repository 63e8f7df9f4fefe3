#include "corrkernel/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "corrkernel/errors.hpp"
#include "corrkernel/log.hpp"

namespace corrkernel {

namespace {

Alphabet select_labels(const Alphabet& source, const std::vector<bool>& keep) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (keep[i]) labels.push_back(source.label(i));
  }
  return Alphabet(labels);
}

}  // namespace

JointDistribution::JointDistribution(Alphabet x_alphabet, Alphabet y_alphabet, Eigen::MatrixXd pxy)
    : x_alphabet_(std::move(x_alphabet)), y_alphabet_(std::move(y_alphabet)), pxy_(std::move(pxy)) {
  if (static_cast<std::size_t>(pxy_.rows()) != x_alphabet_.size() ||
      static_cast<std::size_t>(pxy_.cols()) != y_alphabet_.size()) {
    throw InvalidInputError("pxy shape does not match alphabet sizes");
  }
  if ((pxy_.array() < 0.0).any()) {
    throw InvalidInputError("pxy entries must be non-negative");
  }
  const double mass = pxy_.sum();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw InvalidInputError("pxy mass " + std::to_string(mass) + " is not 1 within tolerance");
  }

  // Trim symbols whose marginal falls below threshold, then renormalize the
  // surviving table so downstream identities see exact unit mass.
  Eigen::VectorXd row_sums = pxy_.rowwise().sum();
  Eigen::VectorXd col_sums = pxy_.colwise().sum();
  std::vector<bool> keep_x(x_alphabet_.size()), keep_y(y_alphabet_.size());
  bool trimmed = false;
  for (std::size_t i = 0; i < x_alphabet_.size(); ++i) {
    keep_x[i] = row_sums(static_cast<Eigen::Index>(i)) >= kTrimThreshold;
    trimmed |= !keep_x[i];
  }
  for (std::size_t j = 0; j < y_alphabet_.size(); ++j) {
    keep_y[j] = col_sums(static_cast<Eigen::Index>(j)) >= kTrimThreshold;
    trimmed |= !keep_y[j];
  }
  if (trimmed) {
    const auto nx_kept = std::count(keep_x.begin(), keep_x.end(), true);
    const auto ny_kept = std::count(keep_y.begin(), keep_y.end(), true);
    if (nx_kept == 0 || ny_kept == 0) {
      throw InvalidInputError("all probability mass fell below the trim threshold");
    }
    Eigen::MatrixXd kept(nx_kept, ny_kept);
    Eigen::Index r = 0;
    for (std::size_t i = 0; i < keep_x.size(); ++i) {
      if (!keep_x[i]) continue;
      Eigen::Index c = 0;
      for (std::size_t j = 0; j < keep_y.size(); ++j) {
        if (!keep_y[j]) continue;
        kept(r, c++) = pxy_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
      ++r;
    }
    log_info("trimmed " + std::to_string(x_alphabet_.size() - nx_kept) + " x-symbols and " +
             std::to_string(y_alphabet_.size() - ny_kept) + " y-symbols with vanishing marginals");
    x_alphabet_ = select_labels(x_alphabet_, keep_x);
    y_alphabet_ = select_labels(y_alphabet_, keep_y);
    pxy_ = kept / kept.sum();
  }

  px_ = pxy_.rowwise().sum();
  py_ = pxy_.colwise().sum();
}

JointDistribution JointDistribution::from_samples(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    std::optional<Alphabet> x_alphabet, std::optional<Alphabet> y_alphabet) {
  if (pairs.empty()) {
    throw InvalidInputError("sample list is empty");
  }

  auto build = [&pairs](const std::optional<Alphabet>& declared, bool first_of_pair) {
    if (declared.has_value()) return *declared;
    std::vector<std::string> labels;
    for (const auto& p : pairs) {
      const std::string& s = first_of_pair ? p.first : p.second;
      if (std::find(labels.begin(), labels.end(), s) == labels.end()) labels.push_back(s);
    }
    return Alphabet(labels);
  };
  const Alphabet ax = build(x_alphabet, true);
  const Alphabet ay = build(y_alphabet, false);

  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(ax.size()),
                                                 static_cast<Eigen::Index>(ay.size()));
  for (const auto& [xs, ys] : pairs) {
    const auto xi = ax.index_of(xs);
    const auto yi = ay.index_of(ys);
    if (!xi) throw InvalidInputError("sample x-label not in alphabet: " + xs);
    if (!yi) throw InvalidInputError("sample y-label not in alphabet: " + ys);
    counts(static_cast<Eigen::Index>(*xi), static_cast<Eigen::Index>(*yi)) += 1.0;
  }
  return JointDistribution(ax, ay, counts / static_cast<double>(pairs.size()));
}

Eigen::MatrixXd JointDistribution::conditional_y_given_x() const {
  Eigen::MatrixXd cond(pxy_.rows(), pxy_.cols());
  for (Eigen::Index i = 0; i < pxy_.rows(); ++i) {
    if (px_(i) <= 0.0) {
      throw InvalidStateError("zero-probability row in conditional: " +
                              x_alphabet_.label(static_cast<std::size_t>(i)));
    }
    cond.row(i) = pxy_.row(i) / px_(i);
  }
  return cond;
}

JointDistribution JointDistribution::xx_prime() const {
  // P(x,x') = sum_y P(x,y) P(x',y) / P_Y(y); symmetric with both marginals
  // equal to P_X.
  Eigen::MatrixXd scaled = pxy_ * py_.cwiseInverse().asDiagonal() * pxy_.transpose();
  scaled = 0.5 * (scaled + scaled.transpose());
  return JointDistribution(x_alphabet_, x_alphabet_, scaled);
}

double JointDistribution::mutual_information() const {
  double info = 0.0;
  for (Eigen::Index i = 0; i < pxy_.rows(); ++i) {
    for (Eigen::Index j = 0; j < pxy_.cols(); ++j) {
      const double p = pxy_(i, j);
      if (p > 0.0) {
        info += p * std::log(p / (px_(i) * py_(j)));
      }
    }
  }
  // Roundoff can leave a tiny negative residue on independent tables.
  if (info < 0.0 && info > -1e-12) info = 0.0;
  return info;
}

}  // namespace corrkernel

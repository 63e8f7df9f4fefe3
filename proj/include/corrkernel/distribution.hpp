#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrkernel/alphabet.hpp"

namespace corrkernel {

// Joint probability table over two finite alphabets. Construction validates
// (entries >= 0, total mass 1 within 1e-9) and trims symbols whose marginal
// probability falls below 1e-12, so every retained marginal is strictly
// positive. Immutable after construction.
class JointDistribution {
 public:
  static constexpr double kMassTolerance = 1e-9;
  static constexpr double kTrimThreshold = 1e-12;

  JointDistribution(Alphabet x_alphabet, Alphabet y_alphabet, Eigen::MatrixXd pxy);

  // Empirical distribution of a sample list. Alphabets are ordered by first
  // appearance unless explicitly supplied.
  static JointDistribution from_samples(
      const std::vector<std::pair<std::string, std::string>>& pairs,
      std::optional<Alphabet> x_alphabet = std::nullopt,
      std::optional<Alphabet> y_alphabet = std::nullopt);

  const Alphabet& x_alphabet() const { return x_alphabet_; }
  const Alphabet& y_alphabet() const { return y_alphabet_; }
  const Eigen::MatrixXd& pxy() const { return pxy_; }

  // Marginals P_X, P_Y (row / column sums).
  const Eigen::VectorXd& px() const { return px_; }
  const Eigen::VectorXd& py() const { return py_; }

  std::size_t nx() const { return static_cast<std::size_t>(pxy_.rows()); }
  std::size_t ny() const { return static_cast<std::size_t>(pxy_.cols()); }

  // P_{Y|X} as an |X| x |Y| table; every row sums to 1.
  Eigen::MatrixXd conditional_y_given_x() const;

  // Joint distribution of (X, X') where X and X' are conditionally
  // independent given Y: P(x,x') = sum_y P_Y(y) P_{X|Y=y}(x) P_{X|Y=y}(x').
  JointDistribution xx_prime() const;

  // I(X;Y) in nats, with 0 log 0 := 0.
  double mutual_information() const;

 private:
  Alphabet x_alphabet_;
  Alphabet y_alphabet_;
  Eigen::MatrixXd pxy_;
  Eigen::VectorXd px_;
  Eigen::VectorXd py_;
};

}  // namespace corrkernel

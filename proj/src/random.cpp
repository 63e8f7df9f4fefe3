#include "corrkernel/random.hpp"

#include "corrkernel/errors.hpp"

namespace corrkernel {

namespace {

std::vector<std::string> indexed_labels(const char* prefix, int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return labels;
}

}  // namespace

JointDistribution seeded_random_joint(std::uint64_t seed, int nx, int ny) {
  if (nx < 2 || ny < 2) {
    throw InvalidInputError("seeded_random_joint needs nx, ny >= 2");
  }
  SplitMix64 rng(seed);
  Eigen::MatrixXd table(nx, ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      table(i, j) = 0.05 + rng.next_double();  // floor keeps marginals healthy
    }
  }
  table /= table.sum();
  return JointDistribution(Alphabet(indexed_labels("x", nx)), Alphabet(indexed_labels("y", ny)),
                           table);
}

JointDistribution seeded_random_balanced_binary(std::uint64_t seed, int nx) {
  if (nx < 2) {
    throw InvalidInputError("seeded_random_balanced_binary needs nx >= 2");
  }
  SplitMix64 rng(seed);
  Eigen::MatrixXd table(nx, 2);
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXd column(nx);
    for (int i = 0; i < nx; ++i) column(i) = 0.05 + rng.next_double();
    table.col(j) = 0.5 * column / column.sum();
  }
  return JointDistribution(Alphabet(indexed_labels("x", nx)),
                           Alphabet(std::vector<std::string>{"1", "-1"}), table);
}

Feature seeded_random_feature(std::uint64_t seed, const Alphabet& alphabet, int dim, double lo,
                              double hi) {
  if (dim < 1) throw InvalidInputError("seeded_random_feature needs dim >= 1");
  SplitMix64 rng(seed);
  Eigen::MatrixXd values(dim, static_cast<Eigen::Index>(alphabet.size()));
  for (int i = 0; i < dim; ++i) {
    for (std::size_t x = 0; x < alphabet.size(); ++x) {
      values(i, static_cast<Eigen::Index>(x)) = lo + (hi - lo) * rng.next_double();
    }
  }
  return Feature(alphabet, values);
}

}  // namespace corrkernel

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corrkernel/distribution.hpp"
#include "corrkernel/feature.hpp"
#include "corrkernel/fisher.hpp"
#include "corrkernel/kernel.hpp"
#include "corrkernel/modal.hpp"
#include "json.hpp"

namespace corrkernel {

// File schemas:
//   distribution: { "x_alphabet": [...], "y_alphabet": [...], "pxy": [[...]] }  (rows = x)
//   feature:      { "alphabet": [...], "values": [[...]] }                      (rows = dims)
//   kernel:       { "alphabet": [...], "gram": [[...]] }
//   samples CSV:  header "x,y", one pair per line, UTF-8
// Parse errors surface as InvalidInputError naming the offending field.

nlohmann::json distribution_to_json(const JointDistribution& joint);
JointDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json feature_to_json(const Feature& f);
Feature feature_from_json(const nlohmann::json& j);

nlohmann::json kernel_to_json(const Kernel& k);
Kernel kernel_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const ModalDecomposition& d);

// Family spec:
//   { "x_alphabet": [...], "base": [...], "sufficient_stats": [[...]],
//     "y_alphabet": [...], "py": [...], "directions": [[...]] }   (rows = y)
struct FamilySpec {
  ParametricFamily family;
  Alphabet y_alphabet;
  Eigen::VectorXd py;
  std::vector<Eigen::VectorXd> directions;
};
FamilySpec family_spec_from_json(const nlohmann::json& j);

std::vector<std::pair<std::string, std::string>> samples_from_csv(const std::string& text);

// Shortest-round-trip-safe float formatting for CSV (17 significant digits,
// '.' decimal, no locale).
std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace corrkernel

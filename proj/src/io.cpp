#include "corrkernel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "corrkernel/errors.hpp"

namespace corrkernel {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw InvalidInputError(std::string("missing or non-array field: ") + field);
  }
  std::vector<std::string> out;
  for (const auto& item : j[field]) {
    if (!item.is_string()) {
      throw InvalidInputError(std::string("non-string entry in field: ") + field);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Eigen::MatrixXd matrix_field(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].empty()) {
    throw InvalidInputError(std::string("missing or non-array field: ") + field);
  }
  const auto& rows = j[field];
  const std::size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
  if (ncols == 0) {
    throw InvalidInputError(std::string("empty or malformed matrix row in field: ") + field);
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ncols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols) {
      throw InvalidInputError(std::string("ragged matrix in field: ") + field);
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (!rows[r][c].is_number()) {
        throw InvalidInputError(std::string("non-numeric matrix entry in field: ") + field);
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].get<double>();
    }
  }
  return m;
}

Eigen::VectorXd vector_field(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw InvalidInputError(std::string("missing or non-array field: ") + field);
  }
  Eigen::VectorXd v(static_cast<Eigen::Index>(j[field].size()));
  for (std::size_t i = 0; i < j[field].size(); ++i) {
    if (!j[field][i].is_number()) {
      throw InvalidInputError(std::string("non-numeric entry in field: ") + field);
    }
    v(static_cast<Eigen::Index>(i)) = j[field][i].get<double>();
  }
  return v;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

nlohmann::json distribution_to_json(const JointDistribution& joint) {
  return json{{"x_alphabet", joint.x_alphabet().labels()},
              {"y_alphabet", joint.y_alphabet().labels()},
              {"pxy", matrix_to_json(joint.pxy())}};
}

JointDistribution distribution_from_json(const nlohmann::json& j) {
  return JointDistribution(Alphabet(string_list(j, "x_alphabet")),
                           Alphabet(string_list(j, "y_alphabet")), matrix_field(j, "pxy"));
}

nlohmann::json feature_to_json(const Feature& f) {
  return json{{"alphabet", f.alphabet().labels()}, {"values", matrix_to_json(f.values())}};
}

Feature feature_from_json(const nlohmann::json& j) {
  return Feature(Alphabet(string_list(j, "alphabet")), matrix_field(j, "values"));
}

nlohmann::json kernel_to_json(const Kernel& k) {
  return json{{"alphabet", k.alphabet().labels()}, {"gram", matrix_to_json(k.gram())}};
}

Kernel kernel_from_json(const nlohmann::json& j) {
  return Kernel(Alphabet(string_list(j, "alphabet")), matrix_field(j, "gram"));
}

nlohmann::json decomposition_to_json(const ModalDecomposition& d) {
  return json{{"sigmas", vector_to_json(d.sigmas)},
              {"f_star", matrix_to_json(d.f_star)},
              {"g_star", matrix_to_json(d.g_star)},
              {"rho", d.rho}};
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
  Alphabet x_alphabet(string_list(j, "x_alphabet"));
  Eigen::VectorXd base = vector_field(j, "base");
  Eigen::MatrixXd stats = matrix_field(j, "sufficient_stats");
  Alphabet y_alphabet(string_list(j, "y_alphabet"));
  Eigen::VectorXd py = vector_field(j, "py");
  Eigen::MatrixXd directions = matrix_field(j, "directions");  // rows = y
  if (static_cast<std::size_t>(directions.rows()) != y_alphabet.size()) {
    throw InvalidInputError("directions row count must match the y_alphabet");
  }
  if (directions.cols() != stats.rows()) {
    throw InvalidInputError("directions width must match the sufficient_stats row count");
  }
  std::vector<Eigen::VectorXd> dirs;
  for (Eigen::Index r = 0; r < directions.rows(); ++r) {
    dirs.push_back(directions.row(r).transpose());
  }
  return FamilySpec{ParametricFamily::exponential_tilt(x_alphabet, base, stats),
                    std::move(y_alphabet), std::move(py), std::move(dirs)};
}

std::vector<std::pair<std::string, std::string>> samples_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InvalidInputError("empty sample file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y") throw InvalidInputError("sample CSV must start with header 'x,y'");

  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw InvalidInputError("sample CSV line " + std::to_string(line_no) + " has no comma");
    }
    pairs.emplace_back(line.substr(0, comma), line.substr(comma + 1));
  }
  return pairs;
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  std::ostringstream content;
  content << in.rdbuf();
  return content.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write file: " + path);
  out << content;
}

}  // namespace corrkernel

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace corrkernel {

// Parsed CLI invocation. run() owns dispatch so the whole surface is
// testable without spawning a process.
struct RunConfig {
  std::string subcommand;
  std::string in_path;
  std::string out_path;       // empty -> stdout
  std::string feature_path;
  std::string kernel_path;
  std::string family_path;
  std::uint64_t seed = 0;
  double lambda = 1.0;
  std::vector<double> eps = {0.2, 0.1, 0.05};
  int iters = 2000;
  double tol = 1e-9;
  int trials = 50;
  std::string solver = "closed";  // or "generic"
  std::string format = "json";    // or "csv" where applicable
  bool emit_kdm = false;
};

// Exit status: 0 ok, 1 validation/input failure (error JSON on err),
// 2 property-suite failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace corrkernel

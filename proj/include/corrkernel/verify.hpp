#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corrkernel {

struct PropertyResult {
  std::string name;
  int passed = 0;
  int trials = 0;
  std::string first_failure;  // empty when all trials passed

  bool ok() const { return passed == trials; }
};

// Runs every invariant suite on seeded random instances. Deterministic for a
// fixed (seed, trials) pair; independent of scheduling.
std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int trials);

// Fixed-format summary: one line per property plus a PASS/FAIL trailer.
// Byte-identical across runs for identical inputs.
std::string summarize_properties(const std::vector<PropertyResult>& results);

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace corrkernel

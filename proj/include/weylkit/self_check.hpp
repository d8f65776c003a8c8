#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylkit/core.hpp"

namespace weylkit {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Invariant suite run by `weylkit verify`: generic checks on seeded random
/// coefficient sets plus per-fixture checks for each supplied set.
std::vector<CheckResult> run_self_check(const std::vector<JacobiCoefficients>& fixtures,
                                        std::uint64_t seed = 20181017);

/// Matrix size used for a coefficient set that does not declare N.
int default_matrix_size(const JacobiCoefficients& coeffs);

}  // namespace weylkit

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rrgexp {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<CheckResult>& checks);

/// Closed form vs brute-force oracle, derivative vs finite differences,
/// constraint residuals, scale covariance, monotone z*(c).
std::vector<CheckResult> verify_entropy(int trials = 100,
                                        std::uint64_t seed = 1);

/// Q-polynomial coefficients, Q positivity sampling, and the root bound
/// z* < sqrt(gamma / (delta/2 - gamma)) on a gamma grid, delta in {4, 6, 8}.
std::vector<CheckResult> verify_rootbound(int grid_points = 1000);

/// Configuration probability: total-probability sums, the exact two-vertex
/// values, and a seeded Monte Carlo comparison at n = 6, delta = 4.
std::vector<CheckResult> verify_counting(int mc_trials = 200000,
                                         std::uint64_t seed = 3);

/// Ordering probability vs exhaustive permutation enumeration, p + q <= max_total.
std::vector<CheckResult> verify_ordering(int max_total = 8);

/// f <= covering cell bound on seeded feasible tuples, strict monotonicity of
/// H, and grid-refinement monotonicity of the corner certificate.
std::vector<CheckResult> verify_dominance(int tuples = 1000,
                                          std::uint64_t seed = 5,
                                          int grid_m = 200);

}  // namespace rrgexp

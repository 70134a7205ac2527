#pragma once

#include <cstdint>
#include <vector>

#include "rrgexp/errors.hpp"

namespace rrgexp {

/// Weights of the balanced-cut entropy problem: b_i = C(delta, i) for
/// i != delta/2 and b_{delta/2} = C(delta, delta/2) / 2.
struct SymmetricWeights {
  int delta = 0;
  std::vector<double> b;
  bool verified = false;  // root bound is only proven for delta in {4, 6, 8}

  static SymmetricWeights for_delta(int delta);
};

struct RootBoundWitness {
  int delta = 0;
  double gamma = 0.0;
  double z_star = 0.0;
  double z0 = 0.0;  // sqrt(gamma / (delta/2 - gamma))
  bool holds = false;
};

/// H_delta(gamma): balanced-cut exponent bound.
double h_value(int delta, double gamma);

/// H'(gamma) = ln(gamma / (delta/2 - gamma)) - 2 ln z*.
double h_derivative(int delta, double gamma);

/// Exact integer coefficients of Q(z) = (1 + z^2) S1(z) - (delta/2) z^2 S2(z)
/// with S1 = sum b_i (i/2) z^i and S2 = sum b_i z^i. Internally computed in
/// quarter units to clear the half-integer b_{delta/2}; the result is integral.
std::vector<long long> q_polynomial(int delta);

/// Dense sampling of (0, 1/sqrt(3)) plus coefficient-wise comparison against
/// the positive-term factorizations for delta in {4, 6, 8}.
bool verify_q_positive(int delta);

RootBoundWitness verify_root_bound(int delta, double gamma);

/// Root of H_delta(./2) by binary search on nu in (0, delta/4).
double nu_star(int delta, double tol = 1e-9);

struct NuStarResult {
  double nu = 0.0;
  bool verified = false;
};
NuStarResult nu_star_result(int delta, double tol = 1e-9);

/// C(n, k) as a double (exact for the small arguments used here).
double binomial(int n, int k);

}  // namespace rrgexp

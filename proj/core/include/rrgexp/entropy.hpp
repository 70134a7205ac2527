#pragma once

#include <optional>
#include <vector>

#include "rrgexp/errors.hpp"

namespace rrgexp {

/// Instance of the constrained entropy maximization
///   Phi*(a, c, b) = max { sum_i y_i ln(b_i / y_i) :
///                         sum_i y_i = a, sum_i i*y_i = c, y >= 0 },
/// with indices i = 0..T and T = b.size() - 1.
struct EntropyProblem {
  double a = 1.0;              // total mass, > 0
  double c = 0.0;              // first moment, in [0, a*T]
  std::vector<double> b;       // positive weights, size T+1, T >= 1

  int dimension() const { return static_cast<int>(b.size()) - 1; }
  void validate() const;       // throws on malformed instances
};

struct EntropySolution {
  std::vector<double> y_star;
  std::optional<double> z_star;  // absent at the boundary moments c in {0, aT}
  double objective = 0.0;
  double lambda = 0.0;           // mass multiplier (NaN at the boundary)
  double mu = 0.0;               // moment multiplier, = -ln z* in the interior
};

/// Unique positive root of sum_i (a*i - c) b_i z^i = 0.
/// Requires the interior regime 0 < c < a*T.
double root_z_star(const EntropyProblem& problem);

/// Closed-form optimum. Boundary moments c = 0 and c = a*T return the
/// corresponding point masses (z_star absent).
EntropySolution solve_entropy(const EntropyProblem& problem);

/// dPhi*/dc = -ln z* (envelope theorem); interior regime only.
double phi_star_derivative_c(const EntropyProblem& problem);

/// sum_i y_i ln(b_i / y_i) with the convention 0 * ln(./0) = 0.
double evaluate_objective(const std::vector<double>& y,
                          const std::vector<double>& b);

/// Independent oracle: conditional-gradient ascent over the feasible
/// polytope, stopped at a duality gap of resolution^2. Always <= Phi* and
/// within that gap of it for interior instances.
double brute_force_phi_star(const EntropyProblem& problem, double resolution);

/// Convenience wrapper: Phi*(a, c, b) including exact boundary moments.
double phi_star(double a, double c, const std::vector<double>& b);

/// Like phi_star but clamps c into [0, a*T] first; used by cell bounding
/// where a grid corner may fall just past the feasible range.
double phi_star_clamped(double a, double c, const std::vector<double>& b);

}  // namespace rrgexp

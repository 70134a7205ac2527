#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rrgexp/errors.hpp"

namespace rrgexp {

enum class CellMethod { corner, tangent };

std::string to_string(CellMethod m);
CellMethod cell_method_from_string(const std::string& s);

/// A feasible point of the exponent function f: cross-degree profiles
/// x in X(alpha, gamma) and x_bar in X(1 - alpha, gamma).
struct ExponentPoint {
  double alpha = 0.0;
  double gamma = 0.0;
  std::vector<double> x;      // indices 0..delta/2
  std::vector<double> x_bar;  // indices 0..delta/2, top entry 0 when alpha < 1/2
};

struct CellBound {
  double alpha_lo = 0.0, alpha_hi = 0.0;
  double gamma_lo = 0.0, gamma_hi = 0.0;
  double g_bound = 0.0;
  double phi_bound = 0.0;
  double phi_bar_bound = 0.0;
  double total = 0.0;
  CellMethod method = CellMethod::corner;
};

struct Certificate {
  int delta = 0;
  double nu = 0.0;
  double nu_lower = 0.0;
  double alpha_floor = 0.0;
  int grid_m = 0;
  double f_star_upper = 0.0;
  bool negative = false;
  CellBound worst_cell;
  CellMethod method = CellMethod::corner;
  bool cell_error = false;       // some cell failed to evaluate
  std::string error_message;
};

/// G(alpha, gamma): the profile-independent part of the exponent.
double g_value(int delta, double alpha, double gamma);

/// (dG/dalpha, dG/dgamma), both closed form.
std::pair<double, double> g_partials(int delta, double alpha, double gamma);

double f_value(const ExponentPoint& point, int delta);

/// Seeded random point of X(alpha, gamma) via convex mixing of the polytope
/// vertices. Returns a vector over 0..delta/2 (top entry forced to zero when
/// alpha > 1/2).
std::vector<double> sample_feasible(int delta, double alpha, double gamma,
                                    std::uint64_t seed);

CellBound cell_upper_bound(int delta, double alpha_lo, double alpha_hi,
                           double gamma_lo, double gamma_hi, CellMethod method);

/// Interval-discretization certificate that f* < 0 over the asymmetric range
/// alpha in (alpha_floor, 1/2), gamma in [alpha*nu_lower, alpha*nu].
Certificate certify_asymmetric(int delta, double nu, int grid_m,
                               double alpha_floor, double nu_lower,
                               CellMethod method, int threads = 0);

}  // namespace rrgexp

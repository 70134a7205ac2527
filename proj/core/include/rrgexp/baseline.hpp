#pragma once

#include "rrgexp/errors.hpp"

namespace rrgexp {

/// Classical baseline for the expansion of a random delta-regular graph,
/// plus the small-set constants used by the asymmetric certifier.
struct BaselineResult {
  int delta = 0;
  double eta = 0.0;              // solves the defining entropy equation
  double nu_lower = 0.0;         // (1 - eta) * delta / 2
  double small_set_alpha = 0.1;  // cited literal
  double small_set_floor = 0.0;  // 3*delta/8 - 1, cited literal
};

/// eta in (0,1) with (1-eta)log2(1-eta) + (1+eta)log2(1+eta) = 4/delta.
double bollobas_eta(int delta, double tol = 1e-13);

/// (1 - eta) * delta / 2. Strictly speaking the classical bound holds for
/// every nu strictly below this value; we return the supremum.
double bollobas_bound(int delta);

BaselineResult baseline(int delta);

inline constexpr double kSmallSetAlpha = 0.1;
double small_set_floor(int delta);

}  // namespace rrgexp

#include "rrgexp/baseline.hpp"

#include <cmath>

namespace rrgexp {

namespace {

void check_delta(int delta) {
  if (delta < 4 || delta % 2 != 0)
    throw UnsupportedDelta("baseline requires even delta >= 4");
}

}  // namespace

double bollobas_eta(int delta, double tol) {
  check_delta(delta);
  if (!(tol >= 1e-14)) throw std::invalid_argument("tol must be >= 1e-14");
  const double target = 4.0 / delta;
  const auto lhs = [](double e) {
    const double a = (1.0 - e) <= 0.0 ? 0.0
                   : (1.0 - e) * std::log2(1.0 - e);
    return a + (1.0 + e) * std::log2(1.0 + e);
  };
  // lhs is strictly increasing from 0 to 2 on (0,1); plain bisection.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && (hi - lo) > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) > target ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double bollobas_bound(int delta) {
  return (1.0 - bollobas_eta(delta)) * delta / 2.0;
}

double small_set_floor(int delta) {
  check_delta(delta);
  return 3.0 * delta / 8.0 - 1.0;
}

BaselineResult baseline(int delta) {
  BaselineResult r;
  r.delta = delta;
  r.eta = bollobas_eta(delta);
  r.nu_lower = (1.0 - r.eta) * delta / 2.0;
  r.small_set_alpha = kSmallSetAlpha;
  r.small_set_floor = small_set_floor(delta);
  return r;
}

}  // namespace rrgexp

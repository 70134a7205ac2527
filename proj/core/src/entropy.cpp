#include "rrgexp/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rrgexp {

namespace {

double horner(const std::vector<double>& coef, double z) {
  double v = 0.0;
  for (auto it = coef.rbegin(); it != coef.rend(); ++it) v = v * z + *it;
  return v;
}

double horner_derivative(const std::vector<double>& coef, double z) {
  double v = 0.0;
  for (int i = static_cast<int>(coef.size()) - 1; i >= 1; --i)
    v = v * z + coef[i] * i;
  return v;
}

}  // namespace

void EntropyProblem::validate() const {
  if (dimension() < 1)
    throw DegenerateDimension("entropy problem needs T >= 1");
  if (!(a > 0.0)) throw InfeasibleMoment("mass a must be positive");
  for (double w : b)
    if (!(w > 0.0)) throw InfeasibleMoment("weights b must be positive");
}

double root_z_star(const EntropyProblem& p) {
  p.validate();
  const int t = p.dimension();
  if (!(p.c > 0.0 && p.c < p.a * t))
    throw InfeasibleMoment("root solve requires 0 < c < a*T");

  // Coefficients of P(z) = sum (a*i - c) b_i z^i, pre-scaled by max |coef|.
  std::vector<double> q(t + 1);
  double scale = 0.0;
  for (int i = 0; i <= t; ++i) {
    q[i] = (p.a * i - p.c) * p.b[i];
    scale = std::max(scale, std::abs(q[i]));
  }
  for (double& v : q) v /= scale;

  // P(0) = -c*b_0 < 0 and the leading coefficient is positive, with exactly
  // one sign change in between: bracket by doubling, then bisect.
  double lo = 1e-18;
  double hi = 1.0;
  int guard = 0;
  while (horner(q, hi) <= 0.0) {
    hi *= 2.0;
    if (++guard > 2000) throw NoSignChange("failed to bracket z*");
  }
  for (int it = 0; it < 200 && (hi - lo) > 1e-14 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (horner(q, mid) > 0.0 ? hi : lo) = mid;
  }

  // Safeguarded Newton polish.
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double d = horner_derivative(q, z);
    if (d == 0.0) break;
    const double step = z - horner(q, z) / d;
    if (std::isfinite(step) && step > lo && step < hi) z = step;
  }
  return z;
}

double evaluate_objective(const std::vector<double>& y,
                          const std::vector<double>& b) {
  if (y.size() != b.size())
    throw LengthMismatch("objective vectors differ in length");
  double s = 0.0;
  for (size_t i = 0; i < y.size(); ++i)
    if (y[i] > 0.0) s += y[i] * std::log(b[i] / y[i]);
  return s;
}

EntropySolution solve_entropy(const EntropyProblem& p) {
  p.validate();
  const int t = p.dimension();
  if (p.c < 0.0 || p.c > p.a * t)
    throw InfeasibleMoment("moment c outside [0, a*T]");

  EntropySolution sol;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (p.c == 0.0 || p.c == p.a * t) {
    // Point mass at index 0 or T; the root equation degenerates here.
    const int idx = (p.c == 0.0) ? 0 : t;
    sol.y_star.assign(t + 1, 0.0);
    sol.y_star[idx] = p.a;
    sol.objective = p.a * std::log(p.b[idx] / p.a);
    sol.lambda = nan;
    sol.mu = nan;
    return sol;
  }

  const double z = root_z_star(p);
  double big_z = 0.0;
  std::vector<double> pow_z(t + 1);
  double zi = 1.0;
  for (int i = 0; i <= t; ++i, zi *= z) {
    pow_z[i] = zi;
    big_z += p.b[i] * zi;
  }
  sol.y_star.resize(t + 1);
  for (int i = 0; i <= t; ++i) sol.y_star[i] = p.b[i] * p.a * pow_z[i] / big_z;
  sol.z_star = z;
  sol.objective = evaluate_objective(sol.y_star, p.b);
  sol.lambda = std::log(big_z / p.a) - 1.0;  // exp(-1-lambda) Z(z*) = a
  sol.mu = -std::log(z);
  return sol;
}

double phi_star_derivative_c(const EntropyProblem& p) {
  return -std::log(root_z_star(p));
}

double phi_star(double a, double c, const std::vector<double>& b) {
  EntropyProblem p{a, c, b};
  return solve_entropy(p).objective;
}

double phi_star_clamped(double a, double c, const std::vector<double>& b) {
  const double top = a * (static_cast<double>(b.size()) - 1.0);
  return phi_star(a, std::clamp(c, 0.0, top), b);
}

double brute_force_phi_star(const EntropyProblem& p, double resolution) {
  p.validate();
  const int t = p.dimension();
  if (!(p.c > 0.0 && p.c < p.a * t))
    throw InfeasibleMoment("oracle requires the interior regime");
  if (!(resolution > 0.0 && resolution <= 1e-2))
    throw std::invalid_argument("resolution must be in (0, 1e-2]");

  // Conditional-gradient ascent over the polytope {y >= 0, sum y = a,
  // sum i*y = c}. It never touches the root equation, only evaluates
  // feasible points (so the result is always a lower estimate), and its
  // duality gap bounds the distance to the true maximum.
  const double m = p.c / p.a;  // required mean index

  // Polytope vertices: two-support mixtures (i, j) with i < m < j, plus the
  // single-support point when m is integral.
  std::vector<std::vector<double>> vertices;
  if (std::abs(m - std::round(m)) < 1e-12) {
    std::vector<double> v(t + 1, 0.0);
    v[static_cast<int>(std::round(m))] = p.a;
    vertices.push_back(std::move(v));
  }
  for (int i = 0; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      if (m < i || m > j) continue;
      std::vector<double> v(t + 1, 0.0);
      v[i] = p.a * (j - m) / (j - i);
      v[j] = p.a * (m - i) / (j - i);
      vertices.push_back(std::move(v));
    }
  }
  if (vertices.empty()) throw InfeasibleMoment("empty feasible polytope");

  // Start at the vertex average: strictly positive on every index some
  // vertex touches, which is every index that can carry mass.
  std::vector<double> y(t + 1, 0.0);
  for (const auto& v : vertices)
    for (int i = 0; i <= t; ++i) y[i] += v[i] / vertices.size();
  double val = evaluate_objective(y, p.b);

  const double gap_tol = resolution * resolution;  // 1e-3 -> 1e-6 accuracy
  std::vector<double> grad(t + 1), dir(t + 1), trial(t + 1);
  for (int iter = 0; iter < 100000; ++iter) {
    for (int i = 0; i <= t; ++i)
      grad[i] = (y[i] > 0.0) ? std::log(p.b[i] / y[i]) - 1.0 : 1e30;

    // Linear maximization over the polytope = best vertex.
    double best_ip = -std::numeric_limits<double>::infinity();
    const std::vector<double>* best_v = nullptr;
    for (const auto& v : vertices) {
      double ip = 0.0;
      for (int i = 0; i <= t; ++i) ip += grad[i] * v[i];
      if (ip > best_ip) {
        best_ip = ip;
        best_v = &v;
      }
    }
    double gap = 0.0;
    for (int i = 0; i <= t; ++i) {
      dir[i] = (*best_v)[i] - y[i];
      gap += grad[i] * dir[i];
    }
    if (gap <= gap_tol) break;

    // Exact line search on the concave slice phi(s) = f(y + s*dir), s in
    // [0, 1], by multilevel grid refinement.
    double slo = 0.0, shi = 1.0, best_s = 0.0, best_phi = val;
    for (int level = 0; level < 40; ++level) {
      const double step = (shi - slo) / 32.0;
      for (int k = 0; k <= 32; ++k) {
        const double s = slo + k * step;
        for (int i = 0; i <= t; ++i) trial[i] = std::max(y[i] + s * dir[i], 0.0);
        const double phi = evaluate_objective(trial, p.b);
        if (phi > best_phi) {
          best_phi = phi;
          best_s = s;
        }
      }
      if (step <= 1e-14) break;
      slo = std::max(0.0, best_s - step);
      shi = std::min(1.0, best_s + step);
    }
    if (best_phi <= val) break;  // no progress along the ascent direction
    for (int i = 0; i <= t; ++i) y[i] = std::max(y[i] + best_s * dir[i], 0.0);
    val = best_phi;
  }

  // Vertices themselves can carry the maximum when it sits on the boundary.
  for (const auto& v : vertices)
    val = std::max(val, evaluate_objective(v, p.b));
  return val;
}

}  // namespace rrgexp

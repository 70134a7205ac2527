#include "rrgexp/asymmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "rrgexp/entropy.hpp"
#include "rrgexp/symmetric.hpp"

namespace rrgexp {

std::string to_string(CellMethod m) {
  return m == CellMethod::corner ? "corner" : "tangent";
}

CellMethod cell_method_from_string(const std::string& s) {
  if (s == "corner") return CellMethod::corner;
  if (s == "tangent") return CellMethod::tangent;
  throw std::invalid_argument("unknown cell method: " + s);
}

namespace {

void check_delta(int delta) {
  if (delta < 4 || delta % 2 != 0)
    throw UnsupportedDelta("even delta >= 4 required");
}

// xlnx with the continuous extension at 0.
double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

std::vector<double> full_binomials(int delta, int top) {
  std::vector<double> b(top + 1);
  for (int i = 0; i <= top; ++i) b[i] = binomial(delta, i);
  return b;
}

}  // namespace

double g_value(int delta, double alpha, double gamma) {
  check_delta(delta);
  const double d = delta;
  if (!(alpha > 0.0 && alpha <= 0.5 + 1e-12 && gamma > 0.0 &&
        gamma < std::min(alpha * d, (1.0 - alpha) * d)))
    throw OutOfDomain("g_value arguments outside its domain");
  return -d / 2.0 * std::log(d) + xlogx(gamma) +
         (alpha * d - gamma) / 2.0 * std::log(alpha * d - gamma) +
         (d * (1.0 - alpha) - gamma) / 2.0 * std::log(d * (1.0 - alpha) - gamma);
}

std::pair<double, double> g_partials(int delta, double alpha, double gamma) {
  check_delta(delta);
  const double d = delta;
  if (!(alpha > 0.0 && alpha <= 0.5 + 1e-12 && gamma > 0.0 &&
        gamma < std::min(alpha * d, (1.0 - alpha) * d)))
    throw OutOfDomain("g_partials arguments outside its domain");
  const double da = d / 2.0 * std::log((alpha * d - gamma) / (d * (1.0 - alpha) - gamma));
  const double dg = std::log(gamma / std::sqrt((alpha * d - gamma) * (d * (1.0 - alpha) - gamma)));
  return {da, dg};
}

double f_value(const ExponentPoint& pt, int delta) {
  check_delta(delta);
  const int t = delta / 2;
  if (pt.x.size() != static_cast<size_t>(t + 1) ||
      pt.x_bar.size() != static_cast<size_t>(t + 1))
    throw LengthMismatch("profiles must have delta/2 + 1 entries");

  const double tol = 1e-9;
  double sx = 0.0, mx = 0.0, sxb = 0.0, mxb = 0.0;
  for (int i = 0; i <= t; ++i) {
    if (pt.x[i] < -tol || pt.x_bar[i] < -tol)
      throw InfeasiblePoint("negative profile entry");
    sx += pt.x[i];
    mx += i * pt.x[i];
    sxb += pt.x_bar[i];
    mxb += i * pt.x_bar[i];
  }
  if (std::abs(sx - pt.alpha) > tol || std::abs(mx - pt.gamma) > tol ||
      std::abs(sxb - (1.0 - pt.alpha)) > tol || std::abs(mxb - pt.gamma) > tol)
    throw InfeasiblePoint("profile constraints violated");
  if (pt.alpha < 0.5 - 1e-12 && std::abs(pt.x_bar[t]) > tol)
    throw InfeasiblePoint("x_bar top entry must vanish for alpha < 1/2");

  const double base = g_value(delta, pt.alpha, pt.gamma);
  double v = base;
  const double mid = pt.x[t] + pt.x_bar[t];
  if (mid > 0.0) v += mid * std::log(binomial(delta, t) / mid);
  for (int i = 0; i < t; ++i) {
    if (pt.x[i] > 0.0) v += pt.x[i] * std::log(binomial(delta, i) / pt.x[i]);
    if (pt.x_bar[i] > 0.0)
      v += pt.x_bar[i] * std::log(binomial(delta, i) / pt.x_bar[i]);
  }
  return v;
}

std::vector<double> sample_feasible(int delta, double alpha, double gamma,
                                    std::uint64_t seed) {
  check_delta(delta);
  const int t = delta / 2;
  const int top = (alpha > 0.5 + 1e-12) ? t - 1 : t;
  if (!(alpha > 0.0) || gamma < -1e-12 || gamma > alpha * top + 1e-12)
    throw EmptyFeasibleSet("X(alpha, gamma) is empty");

  const double m = gamma / alpha;  // required mean index
  std::vector<std::vector<double>> vertices;
  const double kIntTol = 1e-12;
  if (std::abs(m - std::round(m)) < kIntTol) {
    const int i = static_cast<int>(std::round(m));
    std::vector<double> v(t + 1, 0.0);
    v[i] = alpha;
    vertices.push_back(std::move(v));
  }
  for (int i = 0; i <= top; ++i) {
    for (int j = i + 1; j <= top; ++j) {
      if (m < i - kIntTol || m > j + kIntTol) continue;
      std::vector<double> v(t + 1, 0.0);
      v[i] = alpha * (j - m) / (j - i);
      v[j] = alpha * (m - i) / (j - i);
      vertices.push_back(std::move(v));
    }
  }
  if (vertices.empty()) throw EmptyFeasibleSet("no polytope vertices");

  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(vertices.size());
  double tot = 0.0;
  for (auto& wi : w) {
    wi = expo(rng);
    tot += wi;
  }
  std::vector<double> x(t + 1, 0.0);
  for (size_t k = 0; k < vertices.size(); ++k)
    for (int i = 0; i <= t; ++i) x[i] += (w[k] / tot) * vertices[k][i];
  return x;
}

CellBound cell_upper_bound(int delta, double alpha_lo, double alpha_hi,
                           double gamma_lo, double gamma_hi, CellMethod method) {
  check_delta(delta);
  if (!(alpha_lo <= alpha_hi && gamma_lo <= gamma_hi))
    throw OutOfDomain("cell coordinates out of order");
  if (!(gamma_hi < delta * alpha_lo / 4.0))
    throw MonotoneGuardViolated("gamma_hi >= delta*alpha_lo/4");

  const int t = delta / 2;
  const auto b = full_binomials(delta, t);
  const auto bb = full_binomials(delta, t - 1);

  CellBound cell;
  cell.alpha_lo = alpha_lo;
  cell.alpha_hi = alpha_hi;
  cell.gamma_lo = gamma_lo;
  cell.gamma_hi = gamma_hi;
  cell.method = method;
  // G is decreasing in both arguments on this range.
  cell.g_bound = g_value(delta, alpha_lo, gamma_lo);

  if (method == CellMethod::corner) {
    double phi = -std::numeric_limits<double>::infinity();
    double phib = -std::numeric_limits<double>::infinity();
    for (double a : {alpha_lo, alpha_hi}) {
      for (double g : {gamma_lo, gamma_hi}) {
        phi = std::max(phi, phi_star_clamped(a, g, b));
        phib = std::max(phib, phi_star_clamped(1.0 - a, g, bb));
      }
    }
    cell.phi_bound = phi;
    cell.phi_bar_bound = phib;
  } else {
    // Tangent plane of the concave value function Phi*(a, c) at the cell
    // center, padded by |gradient| times the halfwidths.
    const double am = 0.5 * (alpha_lo + alpha_hi);
    const double gm = 0.5 * (gamma_lo + gamma_hi);
    const double ha = 0.5 * (alpha_hi - alpha_lo);
    const double hg = 0.5 * (gamma_hi - gamma_lo);
    const auto sol = solve_entropy(EntropyProblem{am, gm, b});
    cell.phi_bound =
        sol.objective + std::abs(sol.lambda) * ha + std::abs(sol.mu) * hg;
    const auto solb = solve_entropy(EntropyProblem{1.0 - am, gm, bb});
    cell.phi_bar_bound =
        solb.objective + std::abs(solb.lambda) * ha + std::abs(solb.mu) * hg;
  }
  cell.total = cell.g_bound + cell.phi_bound + cell.phi_bar_bound;
  return cell;
}

Certificate certify_asymmetric(int delta, double nu, int grid_m,
                               double alpha_floor, double nu_lower,
                               CellMethod method, int threads) {
  check_delta(delta);
  if (!(nu > nu_lower && nu_lower > 0.0))
    throw std::invalid_argument("require nu > nu_lower > 0");
  if (!(alpha_floor > 0.0 && alpha_floor < 0.5))
    throw std::invalid_argument("require 0 < alpha_floor < 1/2");
  if (grid_m < 1) throw std::invalid_argument("grid_m must be >= 1");

  Certificate cert;
  cert.delta = delta;
  cert.nu = nu;
  cert.nu_lower = nu_lower;
  cert.alpha_floor = alpha_floor;
  cert.grid_m = grid_m;
  cert.method = method;

  const int m = grid_m;
  const double aw = (0.5 - alpha_floor) / m;
  std::vector<CellBound> cells(static_cast<size_t>(m) * m);
  std::vector<char> failed(static_cast<size_t>(m) * m, 0);
  std::vector<std::string> errors(static_cast<size_t>(m), std::string());

  const auto run_rows = [&](int row_begin, int row_end) {
    for (int i = row_begin; i < row_end; ++i) {
      const double alo = alpha_floor + i * aw;
      const double ahi = alpha_floor + (i + 1) * aw;
      const double glo_range = alo * nu_lower;
      const double ghi_range = ahi * nu;
      const double gw = (ghi_range - glo_range) / m;
      for (int j = 0; j < m; ++j) {
        const size_t idx = static_cast<size_t>(i) * m + j;
        try {
          cells[idx] = cell_upper_bound(delta, alo, ahi, glo_range + j * gw,
                                        glo_range + (j + 1) * gw, method);
        } catch (const std::exception& e) {
          failed[idx] = 1;
          if (errors[i].empty()) errors[i] = e.what();
        }
      }
    }
  };

  int nthreads = threads > 0 ? threads
                             : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, m);
  if (nthreads == 1) {
    run_rows(0, m);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (m + nthreads - 1) / nthreads;
    for (int k = 0; k < nthreads; ++k) {
      const int lo = k * chunk;
      const int hi = std::min(m, lo + chunk);
      if (lo < hi) pool.emplace_back(run_rows, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  // Serial reduction keeps the certificate independent of the thread count.
  double worst = -std::numeric_limits<double>::infinity();
  size_t worst_idx = 0;
  bool any_failed = false;
  for (size_t idx = 0; idx < cells.size(); ++idx) {
    if (failed[idx]) {
      any_failed = true;
      continue;
    }
    if (cells[idx].total > worst) {
      worst = cells[idx].total;
      worst_idx = idx;
    }
  }
  if (any_failed) {
    cert.f_star_upper = std::numeric_limits<double>::infinity();
    cert.negative = false;
    cert.cell_error = true;
    for (const auto& e : errors) {
      if (!e.empty()) {
        cert.error_message = e;
        break;
      }
    }
    return cert;
  }
  cert.f_star_upper = worst;
  cert.negative = worst < 0.0;
  cert.worst_cell = cells[worst_idx];
  return cert;
}

}  // namespace rrgexp

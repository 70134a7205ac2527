#include "rrgexp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "rrgexp/asymmetric.hpp"
#include "rrgexp/baseline.hpp"
#include "rrgexp/entropy.hpp"
#include "rrgexp/pairing.hpp"
#include "rrgexp/symmetric.hpp"

namespace rrgexp {

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

CheckResult check(const std::string& name, bool pass,
                  const std::string& detail = "") {
  return {name, pass, detail};
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_entropy(int trials, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::uniform_int_distribution<int> tdist(2, 6);

  double worst_oracle = 0.0, worst_deriv = 0.0, worst_residual = 0.0,
         worst_scale = 0.0;
  bool monotone_ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    EntropyProblem p;
    const int t = tdist(rng);
    p.b.resize(t + 1);
    for (double& w : p.b) w = 0.1 + 99.9 * unif(rng);
    p.a = 0.1 + 9.9 * unif(rng);
    p.c = p.a * t * (0.05 + 0.9 * unif(rng));

    const auto sol = solve_entropy(p);
    const double brute = brute_force_phi_star(p, 1e-3);
    worst_oracle = std::max(worst_oracle, std::abs(sol.objective - brute));

    // derivative vs central finite difference
    const double h = 1e-6;
    EntropyProblem pp = p, pm = p;
    pp.c += h;
    pm.c -= h;
    const double fd =
        (solve_entropy(pp).objective - solve_entropy(pm).objective) / (2 * h);
    worst_deriv = std::max(worst_deriv, std::abs(fd - phi_star_derivative_c(p)));

    // constraint residuals (relative)
    double mass = 0.0, moment = 0.0;
    for (int i = 0; i <= t; ++i) {
      mass += sol.y_star[i];
      moment += i * sol.y_star[i];
    }
    worst_residual = std::max(worst_residual,
                              std::abs(mass - p.a) / p.a +
                                  std::abs(moment - p.c) / std::max(p.c, 1.0));

    // scale covariance: b -> t*b adds a*ln(t), leaves y*, z* unchanged
    EntropyProblem ps = p;
    const double scale = 3.5;
    for (double& w : ps.b) w *= scale;
    const auto ssol = solve_entropy(ps);
    worst_scale = std::max(
        worst_scale, std::abs(ssol.objective -
                              (sol.objective + p.a * std::log(scale))));
    worst_scale =
        std::max(worst_scale, std::abs(*ssol.z_star - *sol.z_star));

    // z*(c) strictly increasing along the moment axis
    if (trial < 10) {
      double prev = -1.0;
      for (int step = 1; step <= 20; ++step) {
        EntropyProblem pc = p;
        pc.c = p.a * t * step / 21.0;
        const double z = root_z_star(pc);
        if (z <= prev) monotone_ok = false;
        prev = z;
      }
    }
  }

  out.push_back(check("closed form vs brute-force oracle (tol 5e-3)",
                      worst_oracle <= 5e-3, "worst " + fmt(worst_oracle)));
  out.push_back(check("derivative vs central difference (tol 1e-5)",
                      worst_deriv <= 1e-5, "worst " + fmt(worst_deriv)));
  out.push_back(check("constraint residuals (tol 1e-10)",
                      worst_residual <= 1e-10, "worst " + fmt(worst_residual)));
  out.push_back(check("scale covariance (tol 1e-12)", worst_scale <= 1e-12,
                      "worst " + fmt(worst_scale)));
  out.push_back(check("z*(c) strictly increasing", monotone_ok));
  return out;
}

std::vector<CheckResult> verify_rootbound(int grid_points) {
  std::vector<CheckResult> out;
  const std::map<int, std::vector<long long>> expected = {
      {4, {0, 2, 1, -6, -3}},
      {6, {0, 3, 12, 0, -30, -15}},
      {8, {0, 4, 24, 56, -14, -140, -70}},
  };
  for (const auto& [delta, coeffs] : expected) {
    out.push_back(check("Q coefficients exact, delta=" + std::to_string(delta),
                        q_polynomial(delta) == coeffs));
    out.push_back(check("Q positive on (0, 1/sqrt(3)), delta=" +
                            std::to_string(delta),
                        verify_q_positive(delta)));
    bool holds = true;
    double worst_ratio = 0.0;
    for (int i = 1; i <= grid_points; ++i) {
      const double gamma = (delta / 8.0) * i / (grid_points + 1);
      const auto w = verify_root_bound(delta, gamma);
      holds = holds && w.holds;
      worst_ratio = std::max(worst_ratio, w.z_star / w.z0);
    }
    out.push_back(check("z* < z0 on gamma grid, delta=" + std::to_string(delta),
                        holds, "worst z*/z0 " + fmt(worst_ratio)));
  }
  return out;
}

namespace {

// All histograms over 0..delta summing to total.
void enumerate_histograms(int delta, long long total,
                          std::vector<long long>& cur, int idx,
                          std::vector<std::vector<long long>>& out) {
  if (idx == delta) {
    cur[idx] = total;
    out.push_back(cur);
    cur[idx] = 0;
    return;
  }
  for (long long v = 0; v <= total; ++v) {
    cur[idx] = v;
    enumerate_histograms(delta, total - v, cur, idx + 1, out);
  }
  cur[idx] = 0;
}

long long moment_of(const std::vector<long long>& h) {
  long long m = 0;
  for (size_t i = 0; i < h.size(); ++i) m += static_cast<long long>(i) * h[i];
  return m;
}

// Map from encoded profile to exact probability, for a fixed side size k.
std::map<std::string, double> profile_table(int n, int delta, int k) {
  std::vector<std::vector<long long>> hs, hbs;
  std::vector<long long> cur(delta + 1, 0);
  enumerate_histograms(delta, k, cur, 0, hs);
  enumerate_histograms(delta, n - k, cur, 0, hbs);
  std::map<std::string, double> table;
  for (const auto& s : hs) {
    for (const auto& sb : hbs) {
      if (moment_of(s) != moment_of(sb)) continue;
      ConfigurationVector cv;
      cv.k = k;
      cv.c = moment_of(s);
      cv.s = s;
      cv.s_bar = sb;
      const double p = configuration_probability(n, delta, cv);
      if (p <= 0.0) continue;
      std::ostringstream key;
      for (auto v : s) key << v << ',';
      key << '|';
      for (auto v : sb) key << v << ',';
      table[key.str()] += p;
    }
  }
  return table;
}

}  // namespace

std::vector<CheckResult> verify_counting(int mc_trials, std::uint64_t seed) {
  std::vector<CheckResult> out;

  for (auto [n, delta] : std::vector<std::pair<int, int>>{
           {2, 2}, {4, 2}, {4, 4}, {6, 4}}) {
    for (int k : {1, n / 2}) {
      double total = 0.0;
      for (const auto& [key, p] : profile_table(n, delta, k)) total += p;
      std::ostringstream name;
      name << "P sums to 1, n=" << n << " delta=" << delta << " k=" << k;
      out.push_back(check(name.str(), std::abs(total - 1.0) <= 1e-9,
                          "sum " + fmt(total)));
    }
  }

  {
    // n = 2, delta = 2, S = {0}: P(c=0) = 1/3 and P(c=2) = 2/3.
    ConfigurationVector loops;
    loops.k = 1;
    loops.c = 0;
    loops.s = {1, 0, 0};
    loops.s_bar = {1, 0, 0};
    ConfigurationVector crossing;
    crossing.k = 1;
    crossing.c = 2;
    crossing.s = {0, 0, 1};
    crossing.s_bar = {0, 0, 1};
    const double p0 = configuration_probability(2, 2, loops);
    const double p2 = configuration_probability(2, 2, crossing);
    out.push_back(check("two-vertex exact values 1/3 and 2/3",
                        std::abs(p0 - 1.0 / 3.0) <= 1e-12 &&
                            std::abs(p2 - 2.0 / 3.0) <= 1e-12,
                        fmt(p0) + ", " + fmt(p2)));
  }

  {
    const int n = 6, delta = 4, k = 3;
    const std::vector<int> subset = {0, 1, 2};
    const auto table = profile_table(n, delta, k);
    std::map<std::string, long long> counts;
    for (int trial = 0; trial < mc_trials; ++trial) {
      const auto g = sample_pairing(n, delta, seed + trial);
      const auto cv = configuration_vector(g, subset);
      std::ostringstream key;
      for (auto v : cv.s) key << v << ',';
      key << '|';
      for (auto v : cv.s_bar) key << v << ',';
      ++counts[key.str()];
    }
    bool ok = true;
    double worst_sigma = 0.0;
    for (const auto& [key, p] : table) {
      const double expect = p * mc_trials;
      if (expect < 10.0) continue;  // normal approximation guard
      const double sigma = std::sqrt(mc_trials * p * (1.0 - p));
      const auto it = counts.find(key);
      const double observed = it == counts.end() ? 0.0 : it->second;
      const double dev = std::abs(observed - expect) / sigma;
      worst_sigma = std::max(worst_sigma, dev);
      if (dev > 4.0) ok = false;
    }
    out.push_back(check("Monte Carlo vs P within 4 sigma, n=6 delta=4", ok,
                        "worst deviation " + fmt(worst_sigma) + " sigma"));
  }
  return out;
}

std::vector<CheckResult> verify_ordering(int max_total) {
  std::vector<CheckResult> out;
  bool ok = true;
  for (int total = 0; total <= max_total && ok; ++total) {
    for (int p = 0; p <= total && ok; ++p) {
      const int q = total - p;
      // Enumerate distinct interleavings as 0/1 strings; exactly one places
      // all p zeros first.
      std::vector<int> word(total, 1);
      for (int i = 0; i < p; ++i) word[i] = 0;
      long long arrangements = 0, favorable = 0;
      do {
        ++arrangements;
        if (std::is_sorted(word.begin(), word.end())) ++favorable;
      } while (std::next_permutation(word.begin(), word.end()));
      const double exact =
          static_cast<double>(favorable) / static_cast<double>(arrangements);
      if (ordering_probability(p, q) != exact) ok = false;
    }
  }
  out.push_back(check("ordering probability vs exhaustive enumeration, p+q <= " +
                          std::to_string(max_total),
                      ok));
  return out;
}

std::vector<CheckResult> verify_dominance(int tuples, std::uint64_t seed,
                                          int grid_m) {
  std::vector<CheckResult> out;
  for (int delta : {4, 6, 8}) {
    const double nu = nu_star(delta);
    const double nu_lo = bollobas_bound(delta);
    const double afloor = kSmallSetAlpha;
    const int m = grid_m;
    const double aw = (0.5 - afloor) / m;

    std::mt19937_64 rng(seed + delta);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    bool dominated = true;
    double worst_slack = -1e9;
    const int per_delta = tuples / 3 + 1;
    for (int trial = 0; trial < per_delta; ++trial) {
      const double alpha = afloor + (0.5 - afloor) * (0.001 + 0.998 * unif(rng));
      const double gamma = alpha * (nu_lo + (nu - nu_lo) * unif(rng));
      ExponentPoint pt;
      pt.alpha = alpha;
      pt.gamma = gamma;
      pt.x = sample_feasible(delta, alpha, gamma, seed + 2 * trial);
      pt.x_bar = sample_feasible(delta, 1.0 - alpha, gamma, seed + 2 * trial + 1);
      const double f = f_value(pt, delta);

      const int i = std::clamp(
          static_cast<int>(std::floor((alpha - afloor) / aw)), 0, m - 1);
      const double alo = afloor + i * aw, ahi = alo + aw;
      const double glo_range = alo * nu_lo, ghi_range = ahi * nu;
      const double gw = (ghi_range - glo_range) / m;
      const int j = std::clamp(
          static_cast<int>(std::floor((gamma - glo_range) / gw)), 0, m - 1);
      for (auto method : {CellMethod::corner, CellMethod::tangent}) {
        const auto cell =
            cell_upper_bound(delta, alo, ahi, glo_range + j * gw,
                             glo_range + (j + 1) * gw, method);
        worst_slack = std::max(worst_slack, f - cell.total);
        if (f > cell.total + 1e-12) dominated = false;
      }
    }
    out.push_back(check("f <= covering cell bound, delta=" +
                            std::to_string(delta),
                        dominated, "worst f - bound " + fmt(worst_slack)));

    bool increasing = true;
    double prev = -1e300;
    for (int i = 1; i <= 1000; ++i) {
      const double gamma = 1e-4 + (delta / 8.0 - 2e-4) * (i - 1) / 999.0;
      const double h = h_value(delta, gamma);
      if (h <= prev) increasing = false;
      prev = h;
    }
    out.push_back(check("H strictly increasing on gamma grid, delta=" +
                            std::to_string(delta),
                        increasing));

    const auto coarse = certify_asymmetric(delta, nu, m, afloor, nu_lo,
                                           CellMethod::corner);
    const auto fine = certify_asymmetric(delta, nu, 2 * m, afloor, nu_lo,
                                         CellMethod::corner);
    out.push_back(check("grid refinement does not worsen bound, delta=" +
                            std::to_string(delta),
                        fine.f_star_upper <= coarse.f_star_upper + 1e-12,
                        fmt(coarse.f_star_upper) + " -> " +
                            fmt(fine.f_star_upper)));
  }
  return out;
}

}  // namespace rrgexp

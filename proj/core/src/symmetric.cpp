#include "rrgexp/symmetric.hpp"

#include <cmath>

#include "rrgexp/entropy.hpp"

namespace rrgexp {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

SymmetricWeights SymmetricWeights::for_delta(int delta) {
  if (delta < 4 || delta % 2 != 0)
    throw UnsupportedDelta("symmetric weights require even delta >= 4");
  SymmetricWeights w;
  w.delta = delta;
  const int t = delta / 2;
  w.b.resize(t + 1);
  for (int i = 0; i <= t; ++i) w.b[i] = binomial(delta, i);
  w.b[t] /= 2.0;
  w.verified = (delta == 4 || delta == 6 || delta == 8);
  return w;
}

double h_value(int delta, double gamma) {
  const auto w = SymmetricWeights::for_delta(delta);
  const double half = delta / 2.0;
  if (!(gamma > 0.0 && gamma <= delta / 4.0))
    throw OutOfDomain("h_value requires 0 < gamma <= delta/4");
  return -half * std::log(static_cast<double>(delta)) +
         gamma * std::log(gamma) + (half - gamma) * std::log(half - gamma) +
         2.0 * phi_star(0.5, gamma, w.b);
}

double h_derivative(int delta, double gamma) {
  const auto w = SymmetricWeights::for_delta(delta);
  const double half = delta / 2.0;
  if (!(gamma > 0.0 && gamma < delta / 4.0))
    throw OutOfDomain("h_derivative requires 0 < gamma < delta/4");
  EntropyProblem p{0.5, gamma, w.b};
  const double z = root_z_star(p);
  return std::log(gamma / (half - gamma)) - 2.0 * std::log(z);
}

namespace {

std::vector<long long> convolve(const std::vector<long long>& u,
                                const std::vector<long long>& v) {
  std::vector<long long> r(u.size() + v.size() - 1, 0);
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
  return r;
}

void check_supported(int delta) {
  if (delta != 4 && delta != 6 && delta != 8)
    throw UnsupportedDelta("Q(z) analysis only covers delta in {4, 6, 8}");
}

// The positive-term factorizations, expanded by integer convolution.
std::vector<long long> q_decomposition(int delta) {
  switch (delta) {
    case 4:
      // z (2 + z) (1 - 3 z^2)
      return convolve(convolve({0, 2, 1}, {1, 0, -3}), {1});
    case 6:
      // 3z ((1 - 5 z^4) + z (4 - 10 z^2)) = 3z (1 + 4z - 10 z^3 - 5 z^4)
      return convolve({0, 3}, {1, 4, 0, -10, -5});
    case 8:
      // 2z (2 + z(3 - 7 z^2) + z(9 - 35 z^4) + 14 z^2 (2 - 5 z^2))
      //   = 2z (2 + 12z + 28 z^2 - 7 z^3 - 70 z^4 - 35 z^5)
      return convolve({0, 2}, {2, 12, 28, -7, -70, -35});
    default:
      check_supported(delta);
      return {};
  }
}

}  // namespace

std::vector<long long> q_polynomial(int delta) {
  check_supported(delta);
  const int t = delta / 2;
  // Work in quarter units: with B_i = 2 b_i (always integral), the
  // coefficients of 4 S1 are i*B_i and those of 2 S2 are B_i.
  std::vector<long long> big(t + 1);
  for (int i = 0; i <= t; ++i) {
    const long long bin = static_cast<long long>(binomial(delta, i));
    big[i] = (i == t) ? bin : 2 * bin;
  }
  std::vector<long long> s1q(t + 1);
  for (int i = 0; i <= t; ++i) s1q[i] = static_cast<long long>(i) * big[i];

  std::vector<long long> q4 = convolve({1, 0, 1}, s1q);  // (1 + z^2) * 4 S1
  for (int i = 0; i <= t; ++i) q4[i + 2] -= t * 2 * big[i];  // (delta/2) z^2 * 4 S2
  std::vector<long long> q(q4.size());
  for (size_t i = 0; i < q4.size(); ++i) {
    if (q4[i] % 4 != 0) throw std::logic_error("Q coefficients not integral");
    q[i] = q4[i] / 4;
  }
  return q;
}

bool verify_q_positive(int delta) {
  const auto q = q_polynomial(delta);
  const auto d = q_decomposition(delta);
  if (q.size() != d.size()) return false;
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i] != d[i]) return false;

  const double upper = 1.0 / std::sqrt(3.0);
  const int samples = 100000;
  for (int i = 1; i < samples; ++i) {
    const double z = upper * i / samples;
    double v = 0.0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) v = v * z + *it;
    if (!(v > 0.0)) return false;
  }
  return true;
}

RootBoundWitness verify_root_bound(int delta, double gamma) {
  const auto w = SymmetricWeights::for_delta(delta);
  if (!(gamma > 0.0 && gamma < delta / 8.0))
    throw OutOfDomain("root bound applies for gamma in (0, delta/8)");
  RootBoundWitness rb;
  rb.delta = delta;
  rb.gamma = gamma;
  EntropyProblem p{0.5, gamma, w.b};
  rb.z_star = root_z_star(p);
  rb.z0 = std::sqrt(gamma / (delta / 2.0 - gamma));
  rb.holds = rb.z_star < rb.z0;
  return rb;
}

double nu_star(int delta, double tol) { return nu_star_result(delta, tol).nu; }

NuStarResult nu_star_result(int delta, double tol) {
  const auto w = SymmetricWeights::for_delta(delta);
  if (!(tol >= 1e-12)) throw std::invalid_argument("tol must be >= 1e-12");

  double lo = 1e-6;
  double hi = delta / 4.0 - 1e-6;
  if (!(h_value(delta, lo / 2.0) < 0.0 && h_value(delta, hi / 2.0) > 0.0))
    throw NoSignChange("H does not change sign on the search bracket");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (h_value(delta, mid / 2.0) > 0.0 ? hi : lo) = mid;
  }
  const double nu = 0.5 * (lo + hi);
  if (!(nu / 2.0 < delta / 8.0))
    throw NoSignChange("computed root violates gamma < delta/8");
  return {nu, w.verified};
}

}  // namespace rrgexp

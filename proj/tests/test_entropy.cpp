#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "rrgexp/entropy.hpp"

using namespace rrgexp;

namespace {

// Independent bisection oracle for the root equation, used to cross-check
// the production root finder.
double bisect_root(const EntropyProblem& p) {
  const int t = p.dimension();
  const auto poly = [&](double z) {
    double v = 0.0, zi = 1.0;
    for (int i = 0; i <= t; ++i, zi *= z) v += (p.a * i - p.c) * p.b[i] * zi;
    return v;
  };
  double lo = 0.0, hi = 1.0;
  while (poly(hi) <= 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (poly(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("root_z_star closed-form examples") {
  CHECK(root_z_star({1.0, 0.5, {1, 1}}) == doctest::Approx(1.0).epsilon(1e-12));
  const EntropyProblem sym{1.0, 0.5, {1, 2, 1}};
  CHECK(root_z_star(sym) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(root_z_star(sym) ==
        doctest::Approx(bisect_root(sym)).epsilon(1e-10));
  // 4.5 z^2 + 2 z - 0.5 = 0 -> z = (-2 + sqrt(13)) / 9
  CHECK(root_z_star({1.0, 0.5, {1, 4, 3}}) ==
        doctest::Approx((-2.0 + std::sqrt(13.0)) / 9.0).epsilon(1e-12));
}

TEST_CASE("root_z_star residual and error paths") {
  const EntropyProblem p{2.0, 3.1, {0.3, 7.0, 2.0, 0.4}};
  const double z = root_z_star(p);
  double num = 0.0, den = 0.0, zi = 1.0;
  for (int i = 0; i <= 3; ++i, zi *= z) {
    num += (p.a * i - p.c) * p.b[i] * zi;
    den += std::abs(p.a * i - p.c) * p.b[i] * std::max(1.0, zi);
  }
  CHECK(std::abs(num) / den <= 1e-13);

  CHECK_THROWS_AS(root_z_star({1.0, 0.0, {1, 1}}), InfeasibleMoment);
  CHECK_THROWS_AS(root_z_star({1.0, 1.0, {1, 1}}), InfeasibleMoment);
  CHECK_THROWS_AS(root_z_star({1.0, 0.5, {1}}), DegenerateDimension);
}

TEST_CASE("solve_entropy interior and boundary") {
  const auto sol = solve_entropy({1.0, 1.0, {1, 2, 1}});
  REQUIRE(sol.z_star.has_value());
  CHECK(*sol.z_star == doctest::Approx(1.0));
  CHECK(sol.y_star[0] == doctest::Approx(0.25));
  CHECK(sol.y_star[1] == doctest::Approx(0.5));
  CHECK(sol.y_star[2] == doctest::Approx(0.25));
  CHECK(sol.objective == doctest::Approx(std::log(4.0)));
  CHECK(sol.mu == doctest::Approx(0.0));
  // exp(-1-lambda) Z(z*) = a
  CHECK(std::exp(-1.0 - sol.lambda) * 4.0 == doctest::Approx(1.0));

  const auto bnd = solve_entropy({1.0, 0.0, {1, 1}});
  CHECK_FALSE(bnd.z_star.has_value());
  CHECK(bnd.y_star[0] == doctest::Approx(1.0));
  CHECK(bnd.y_star[1] == 0.0);
  CHECK(bnd.objective == doctest::Approx(0.0));

  const auto top = solve_entropy({2.0, 4.0, {1, 3, 5}});
  CHECK(top.y_star[2] == doctest::Approx(2.0));
  CHECK(top.objective == doctest::Approx(2.0 * std::log(5.0 / 2.0)));

  CHECK_THROWS_AS(solve_entropy({1.0, -0.1, {1, 1}}), InfeasibleMoment);
  CHECK_THROWS_AS(solve_entropy({1.0, 1.1, {1, 1}}), InfeasibleMoment);
}

TEST_CASE("degree-4 symmetric weights instance pinned by the oracle") {
  const EntropyProblem p{0.5, 0.2447, {1, 4, 1.5}};
  const double closed = solve_entropy(p).objective;
  const double brute = brute_force_phi_star(p, 1e-4);
  CHECK(std::abs(closed - brute) <= 1e-3);
  CHECK(closed == doctest::Approx(1.0507).epsilon(1e-3));
}

TEST_CASE("phi_star_derivative_c") {
  CHECK(phi_star_derivative_c({1.0, 1.0, {1, 2, 1}}) == doctest::Approx(0.0));
  CHECK(phi_star_derivative_c({1.0, 0.5, {1, 2, 1}}) ==
        doctest::Approx(std::log(3.0)));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    EntropyProblem p;
    const int t = 2 + static_cast<int>(rng() % 4);
    p.b.resize(t + 1);
    for (double& w : p.b) w = 0.2 + 5.0 * unif(rng);
    p.a = 0.5 + 2.0 * unif(rng);
    p.c = p.a * t * (0.1 + 0.8 * unif(rng));
    const double h = 1e-6;
    EntropyProblem pp = p, pm = p;
    pp.c += h;
    pm.c -= h;
    const double fd =
        (solve_entropy(pp).objective - solve_entropy(pm).objective) / (2 * h);
    CHECK(std::abs(phi_star_derivative_c(p) - fd) <=
          1e-5 * (1.0 + std::abs(fd)));
  }
}

TEST_CASE("evaluate_objective conventions") {
  CHECK(evaluate_objective({0, 0}, {5, 7}) == 0.0);
  CHECK(evaluate_objective({0.5, 0.5}, {1, 1}) ==
        doctest::Approx(std::log(2.0)));
  CHECK(evaluate_objective({0.25, 0.5, 0.25}, {1, 2, 1}) ==
        doctest::Approx(std::log(4.0)));
  CHECK_THROWS_AS(evaluate_objective({0.5}, {1, 1}), LengthMismatch);
}

TEST_CASE("brute-force oracle agrees with the closed form") {
  CHECK(brute_force_phi_star({1.0, 1.0, {1, 2, 1}}, 1e-4) ==
        doctest::Approx(std::log(4.0)).epsilon(1e-3));

  const EntropyProblem q{1.0, 0.5, {1, 4, 3}};
  CHECK(std::abs(brute_force_phi_star(q, 1e-4) - solve_entropy(q).objective) <=
        1e-3);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  EntropyProblem r;
  r.b.resize(4);
  for (double& w : r.b) w = 0.3 + 3.0 * unif(rng);
  r.a = 1.0;
  r.c = 1.2;
  CHECK(std::abs(brute_force_phi_star(r, 1e-3) - solve_entropy(r).objective) <=
        1e-3);
  // The oracle never exceeds the true maximum.
  CHECK(brute_force_phi_star(r, 1e-3) <= solve_entropy(r).objective + 1e-12);
}

TEST_CASE("scale covariance of the solution") {
  const EntropyProblem p{1.3, 2.1, {0.7, 2.0, 1.1, 3.0}};
  const auto sol = solve_entropy(p);
  EntropyProblem ps = p;
  for (double& w : ps.b) w *= 7.25;
  const auto ssol = solve_entropy(ps);
  CHECK(std::abs(ssol.objective - sol.objective - p.a * std::log(7.25)) <=
        1e-12);
  CHECK(std::abs(*ssol.z_star - *sol.z_star) <= 1e-12);
  for (size_t i = 0; i < sol.y_star.size(); ++i)
    CHECK(std::abs(ssol.y_star[i] - sol.y_star[i]) <= 1e-12);
}

TEST_CASE("coefficient sign pattern has exactly one change") {
  const EntropyProblem p{1.7, 2.6, {0.5, 1.0, 9.0, 2.0}};
  int changes = 0;
  double prev = 0.0;
  for (int i = 0; i <= p.dimension(); ++i) {
    const double coef = (p.a * i - p.c) * p.b[i];
    if (prev != 0.0 && coef != 0.0 && (coef > 0) != (prev > 0)) ++changes;
    if (coef != 0.0) prev = coef;
  }
  CHECK(changes == 1);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "rrgexp/asymmetric.hpp"
#include "rrgexp/baseline.hpp"
#include "rrgexp/entropy.hpp"
#include "rrgexp/symmetric.hpp"

using namespace rrgexp;

TEST_CASE("cell method names") {
  CHECK(to_string(CellMethod::corner) == "corner");
  CHECK(to_string(CellMethod::tangent) == "tangent");
  CHECK(cell_method_from_string("corner") == CellMethod::corner);
  CHECK(cell_method_from_string("tangent") == CellMethod::tangent);
  CHECK_THROWS_AS(cell_method_from_string("midpoint"), std::invalid_argument);
}

TEST_CASE("g_value pinned and at the symmetric edge") {
  // Hand evaluation of the closed form at delta=4, alpha=0.3, gamma=0.15.
  CHECK(g_value(4, 0.3, 0.15) == doctest::Approx(-1.74025036).epsilon(1e-7));

  const int d = 6;
  const double gamma = 0.4;
  // At the symmetric edge G reduces to the profile-free part of H.
  const double direct = -d / 2.0 * std::log(static_cast<double>(d)) +
                        gamma * std::log(gamma) +
                        (d / 2.0 - gamma) * std::log(d / 2.0 - gamma);
  CHECK(g_value(d, 0.5, gamma) == doctest::Approx(direct).epsilon(1e-12));

  CHECK_THROWS_AS(g_value(4, 0.0, 0.1), OutOfDomain);
  CHECK_THROWS_AS(g_value(4, 0.3, 1.2), OutOfDomain);
  CHECK_THROWS_AS(g_value(3, 0.3, 0.1), UnsupportedDelta);
}

TEST_CASE("g_partials: closed form vs finite differences, signs") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 4 + 2 * static_cast<int>(rng() % 3);
    const double a = 0.12 + 0.37 * unif(rng);
    const double g = a * d / 4.0 * (0.1 + 0.85 * unif(rng));
    const auto [da, dg] = g_partials(d, a, g);
    const double h = 1e-7;
    const double fda = (g_value(d, a + h, g) - g_value(d, a - h, g)) / (2 * h);
    const double fdg = (g_value(d, a, g + h) - g_value(d, a, g - h)) / (2 * h);
    CHECK(da == doctest::Approx(fda).epsilon(1e-5));
    CHECK(dg == doctest::Approx(fdg).epsilon(1e-5));
    // In the certification range gamma < delta*alpha/4 <= delta/8, G falls
    // in both arguments.
    CHECK(da <= 0.0);
    CHECK(dg < 0.0);
  }
  // dG/dalpha vanishes at the symmetric point.
  CHECK(g_partials(4, 0.5, 0.2).first == doctest::Approx(0.0));
}

TEST_CASE("sample_feasible satisfies the polytope constraints") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 4 + 2 * static_cast<int>(rng() % 3);
    const int t = d / 2;
    const bool big = trial % 2 == 1;  // exercise the complement side too
    const double a = big ? 0.5 + 0.45 * unif(rng) : 0.1 + 0.4 * unif(rng);
    const int top = big ? t - 1 : t;
    const double g = a * top * unif(rng);
    const auto x = sample_feasible(d, a, g, trial);
    REQUIRE(x.size() == static_cast<size_t>(t + 1));
    double mass = 0.0, moment = 0.0;
    for (int i = 0; i <= t; ++i) {
      CHECK(x[i] >= -1e-15);
      mass += x[i];
      moment += i * x[i];
    }
    CHECK(mass == doctest::Approx(a).epsilon(1e-10));
    CHECK(moment == doctest::Approx(g).epsilon(1e-10));
    if (big) CHECK(x[t] == 0.0);
  }
  // Vertex cases collapse to a point mass.
  const auto lowv = sample_feasible(4, 0.3, 0.0, 1);
  CHECK(lowv[0] == doctest::Approx(0.3));
  const auto hiv = sample_feasible(4, 0.3, 0.6, 1);
  CHECK(hiv[2] == doctest::Approx(0.3));
  CHECK_THROWS_AS(sample_feasible(4, 0.3, 0.7, 1), EmptyFeasibleSet);
}

TEST_CASE("f_value validates its input") {
  ExponentPoint pt;
  pt.alpha = 0.3;
  pt.gamma = 0.15;
  pt.x = {0.2, 0.05, 0.05};       // mass 0.3, moment 0.15
  pt.x_bar = {0.625, 0.075, 0.0};  // mass 0.7, moment 0.075 -- wrong moment
  CHECK_THROWS_AS(f_value(pt, 4), InfeasiblePoint);
  pt.x_bar = {0.55, 0.15, 0.0};   // mass 0.7, moment 0.15
  CHECK_NOTHROW(f_value(pt, 4));
  pt.x_bar = {0.575, 0.1, 0.025};  // feasible but nonzero top, alpha < 1/2
  CHECK_THROWS_AS(f_value(pt, 4), InfeasiblePoint);
  pt.x_bar = {0.55, 0.15};
  CHECK_THROWS_AS(f_value(pt, 4), LengthMismatch);
}

TEST_CASE("f is dominated by the covering cell bound") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int d : {4, 6, 8}) {
    const double nu_lo = bollobas_bound(d);
    const double nu_hi = nu_star(d);
    for (int trial = 0; trial < 60; ++trial) {
      const double a = 0.15 + 0.3 * unif(rng);
      const double g = a * (nu_lo + (nu_hi - nu_lo) * unif(rng));
      ExponentPoint pt;
      pt.alpha = a;
      pt.gamma = g;
      pt.x = sample_feasible(d, a, g, rng());
      pt.x_bar = sample_feasible(d, 1.0 - a, g, rng());
      const double f = f_value(pt, d);
      const double w = 1e-3;
      for (auto method : {CellMethod::corner, CellMethod::tangent}) {
        const auto cell =
            cell_upper_bound(d, a - w, a + w, g - w, g + w, method);
        CHECK(f <= cell.total + 1e-9);
      }
    }
  }
}

TEST_CASE("cell bound on a degenerate cell reduces to the point value") {
  const int d = 4;
  const double a = 0.3, g = 0.15;
  const auto b = SymmetricWeights::for_delta(d).b;  // not used; full weights below
  (void)b;
  for (auto method : {CellMethod::corner, CellMethod::tangent}) {
    const auto cell = cell_upper_bound(d, a, a, g, g, method);
    const double phi = phi_star(a, g, {1, 4, 6});
    const double phib = phi_star(1.0 - a, g, {1, 4});
    CHECK(cell.g_bound == doctest::Approx(g_value(d, a, g)).epsilon(1e-12));
    CHECK(cell.phi_bound == doctest::Approx(phi).epsilon(1e-10));
    CHECK(cell.phi_bar_bound == doctest::Approx(phib).epsilon(1e-10));
    CHECK(cell.total ==
          doctest::Approx(cell.g_bound + cell.phi_bound + cell.phi_bar_bound));
  }
}

TEST_CASE("tangent bound pads the center value") {
  const auto cell =
      cell_upper_bound(4, 0.28, 0.32, 0.13, 0.17, CellMethod::tangent);
  CHECK(cell.phi_bound >= phi_star(0.30, 0.15, {1, 4, 6}) - 1e-12);
  CHECK(cell.phi_bar_bound >= phi_star(0.70, 0.15, {1, 4}) - 1e-12);
}

TEST_CASE("monotone guard") {
  CHECK_THROWS_AS(cell_upper_bound(4, 0.2, 0.3, 0.25, 0.3, CellMethod::corner),
                  MonotoneGuardViolated);
  CHECK_THROWS_AS(cell_upper_bound(4, 0.3, 0.2, 0.1, 0.2, CellMethod::corner),
                  OutOfDomain);
}

TEST_CASE("certify_asymmetric at production settings (delta = 4)") {
  const double nu = nu_star(4);
  const double nu_lo = bollobas_bound(4);
  for (auto method : {CellMethod::corner, CellMethod::tangent}) {
    const auto cert = certify_asymmetric(4, nu, 200, 0.1, nu_lo, method);
    CHECK(cert.negative);
    CHECK(cert.f_star_upper < 0.0);
    CHECK_FALSE(cert.cell_error);
    CHECK(cert.worst_cell.total == doctest::Approx(cert.f_star_upper));
    CHECK(cert.worst_cell.total ==
          doctest::Approx(cert.worst_cell.g_bound + cert.worst_cell.phi_bound +
                          cert.worst_cell.phi_bar_bound));
  }
}

TEST_CASE("certificates are independent of the thread count") {
  const double nu = nu_star(4);
  const double nu_lo = bollobas_bound(4);
  const auto one =
      certify_asymmetric(4, nu, 64, 0.1, nu_lo, CellMethod::tangent, 1);
  const auto four =
      certify_asymmetric(4, nu, 64, 0.1, nu_lo, CellMethod::tangent, 4);
  CHECK(one.f_star_upper == four.f_star_upper);  // bitwise
  CHECK(one.worst_cell.alpha_lo == four.worst_cell.alpha_lo);
  CHECK(one.worst_cell.gamma_lo == four.worst_cell.gamma_lo);
}

TEST_CASE("certify argument validation") {
  CHECK_THROWS_AS(certify_asymmetric(4, 0.4, 10, 0.1, 0.44, CellMethod::corner),
                  std::invalid_argument);  // nu <= nu_lower
  CHECK_THROWS_AS(certify_asymmetric(4, 0.48, 0, 0.1, 0.44, CellMethod::corner),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      certify_asymmetric(4, 0.48, 10, 0.6, 0.44, CellMethod::corner),
      std::invalid_argument);
  CHECK_THROWS_AS(
      certify_asymmetric(5, 0.48, 10, 0.1, 0.44, CellMethod::corner),
      UnsupportedDelta);
}

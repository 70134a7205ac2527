#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "rrgexp/baseline.hpp"
#include "rrgexp/symmetric.hpp"

using namespace rrgexp;

namespace {

double defining_lhs(double eta) {
  const auto plogp = [](double x) { return x > 0 ? x * std::log2(x) : 0.0; };
  return plogp(1.0 - eta) + plogp(1.0 + eta);
}

}  // namespace

TEST_CASE("bollobas_eta solves its defining equation") {
  for (int d : {4, 6, 8, 12, 100}) {
    const double eta = bollobas_eta(d);
    CHECK(eta > 0.0);
    CHECK(eta < 1.0);
    CHECK(std::abs(defining_lhs(eta) - 4.0 / d) < 1e-11);
  }
  // The defining left-hand side increases with eta, so eta falls as the
  // right-hand side 4/delta does.
  CHECK(bollobas_eta(100) < bollobas_eta(8));
  CHECK(bollobas_eta(8) < bollobas_eta(4));
}

TEST_CASE("classical bound regression") {
  const auto trunc4 = [](double v) { return std::floor(v * 1e4) / 1e4; };
  CHECK(trunc4(bollobas_bound(4)) == doctest::Approx(0.4401).epsilon(1e-12));
  CHECK(trunc4(bollobas_bound(6)) == doctest::Approx(1.0437).epsilon(1e-12));
  CHECK(trunc4(bollobas_bound(8)) == doctest::Approx(1.7160).epsilon(1e-12));
}

TEST_CASE("improved bound beats the baseline") {
  CHECK(nu_star(4) / bollobas_bound(4) > 1.10);
  for (int d : {4, 6, 8}) CHECK(nu_star(d) / bollobas_bound(d) > 1.05);
}

TEST_CASE("small-set constants") {
  for (int d : {4, 6, 8}) {
    const auto b = baseline(d);
    CHECK(b.delta == d);
    CHECK(b.small_set_alpha == 0.1);
    CHECK(b.small_set_floor == doctest::Approx(3.0 * d / 8.0 - 1.0));
    CHECK(b.nu_lower == doctest::Approx((1.0 - b.eta) * d / 2.0));
  }
  CHECK(small_set_floor(4) == doctest::Approx(0.5));
  CHECK(small_set_floor(6) == doctest::Approx(1.25));
  CHECK(small_set_floor(8) == doctest::Approx(2.0));
}

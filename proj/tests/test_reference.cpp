#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hyprad/model_functions.hpp"
#include "hyprad/reference.hpp"

using namespace hyprad;

TEST_CASE("closed shape for mu = 0 is e^{-ds}") {
  for (double s : {-1.0, 0.0, 0.8}) {
    CHECK(radon_shape_closed({1, 0, 4, true}, 1.0, s) ==
          doctest::Approx(std::exp(-s)).epsilon(1e-13));
    CHECK(radon_shape_closed({2, 0, 4, true}, 3.0, s) ==
          doctest::Approx(std::exp(-2.0 * s)).epsilon(1e-13));
  }
}

TEST_CASE("closed shape off mu = 0") {
  for (double s : {-0.6, 0.0, 1.2}) {
    const double z = std::exp(-2.0 * s);
    // (1,0,4), lambda = 3 (mu = 2): e^{-s} / (1 + e^{-2s})
    CHECK(radon_shape_closed({1, 0, 4, true}, 3.0, s) ==
          doctest::Approx(std::exp(-s) / (1.0 + z)).epsilon(1e-12));
    // (2,0,4), lambda = 1 (mu = -2): e^{-2s} (1/3 + e^{-2s})
    CHECK(radon_shape_closed({2, 0, 4, true}, 1.0, s) ==
          doctest::Approx(std::exp(-2.0 * s) * (1.0 / 3.0 + z)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(radon_shape_closed({1, 0, 4, true}, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(radon_shape_closed({1, 2, 1, true}, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("shape exponential coefficients for spherical lambda") {
  const std::vector<double> a = shape_exponential_coeffs({1, 0, 4, true}, 1.0);
  REQUIRE(a.size() == 1);
  CHECK(a[0] == doctest::Approx(1.0).epsilon(1e-14));

  const std::vector<double> b = shape_exponential_coeffs({2, 0, 4, true}, 1.0);
  REQUIRE(b.size() == 2);
  CHECK(b[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(b[1] == doctest::Approx(1.0).epsilon(1e-13));

  // the expansion exists only for even mu <= 0
  CHECK_THROWS_AS(shape_exponential_coeffs({1, 0, 4, true}, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(shape_exponential_coeffs({1, 0, 4, true}, 3.0), std::invalid_argument);
}

TEST_CASE("C_lambda fit for (1,0,4) at lambda = 1") {
  const CLambdaFit fit = fit_C_lambda({1, 0, 4, true}, 1.0);
  CHECK(fit.ok);
  CHECK(fit.value == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(fit.spread <= 1e-6);
  REQUIRE(fit.ratios.values.size() >= 4);
}

TEST_CASE("exceptional combination flattens the Abel growth") {
  const SpaceParams sp{2, 0, 4, true};
  QuadConfig quad;
  const std::vector<double> coeffs = exceptional_combination(sp, 1.0, quad);
  REQUIRE(coeffs.size() == 1);
  const RadialProfile psi = psi_combination(sp, 1.0, coeffs);
  // reduced transform collapses to C e^{-4s}: pure e^{lambda s} after Abel
  const double r0 = radon_reduced(sp, psi, 0.5, quad).value;
  const double r1 = radon_reduced(sp, psi, 1.0, quad).value;
  CHECK(r0 / r1 == doctest::Approx(std::exp(2.0)).epsilon(1e-6));

  // mu = 0 needs no correction
  CHECK(exceptional_combination(sp, 3.0, quad).empty());
}

TEST_CASE("kernel z-derivatives: rewriting matches finite differences") {
  for (int j : {1, 2, 3}) {
    const LemmaCheckResult r = s_derivative_lemma_check(2, 2.5, 0.7, 0.4, j, 0.3);
    CHECK(r.analytic == doctest::Approx(r.numeric).epsilon(1e-6));
  }
  const LemmaCheckResult r0 = s_derivative_lemma_check(0, 1.0, -0.4, 0.8, 1, 0.0);
  CHECK(r0.analytic == doctest::Approx(r0.numeric).epsilon(1e-6));

  // at z = 0 the dedicated evaluator agrees with the general one
  const LemmaCheckResult rz = s_derivative_lemma_check(2, 3.0, 0.55, 0.25, 2, 0.0);
  CHECK(s_derivative_at_zero(2, 3.0, 2, 0.55, 0.25) ==
        doctest::Approx(rz.analytic).epsilon(1e-12));
}

TEST_CASE("Taylor data of psi~_1 on (1,0,4): c0 = 2, remainder 0") {
  const SpaceParams sp{1, 0, 4, true};
  const TaylorReport rep = taylor_report(sp, psi_tilde(sp, 1.0), {}, 4.0);
  REQUIRE(rep.coefficients.size() == 1);  // k0 = 1
  CHECK(rep.coefficients[0] == doctest::Approx(2.0).epsilon(1e-8));
  REQUIRE(!rep.remainder_samples.values.empty());
  for (double v : rep.remainder_samples.values) CHECK(std::fabs(v) < 1e-6);
  CHECK(std::fabs(rep.constant_term_estimate) < 1e-6);
}

TEST_CASE("rank-one reduction ratio is 1 for (2,0,1)") {
  const GridSeries ratios = reduction_check({2, 0, 1, true}, 2.0, {-0.5, 0.0, 0.5}, {});
  REQUIRE(ratios.values.size() == 3);
  for (double v : ratios.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-7));
  CHECK_THROWS_AS(reduction_check({1, 0, 2, true}, 1.0, {0.0}, QuadConfig{}),
                  std::invalid_argument);  // needs d in {2,4}
}

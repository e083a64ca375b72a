#include <cmath>
#include <complex>
#include <stdexcept>

#include "doctest.h"
#include "hyprad/geometry.hpp"
#include "hyprad/model_functions.hpp"

using namespace hyprad;

TEST_CASE("psi~ profile values and certificate") {
  const SpaceParams sp{1, 0, 4, true};  // rho_q = 2
  const RadialProfile prof = psi_tilde(sp, 1.0);
  CHECK(prof.m == 0);
  const double w = std::cosh(1.0) * std::cosh(1.0);
  CHECK(prof.H(w) == doctest::Approx(0.27216616691214614).epsilon(1e-14));
  CHECK(prof.H(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(prof.decay.H_power == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(decay_check(sp, prof));

  // rapid-decay surrogate fails when the certificate constant is understated
  RadialProfile bad = prof;
  bad.decay.C = 1e-6;
  CHECK_FALSE(decay_check(sp, bad));

  // lambda + rho_q must be positive
  CHECK_THROWS_AS(psi_tilde(sp, -2.0), std::invalid_argument);
}

TEST_CASE("psi combination adds shifted profiles") {
  const SpaceParams sp{2, 0, 4, true};  // rho_q = 5
  const RadialProfile comb = psi_combination(sp, 1.0, {0.25});
  // H = w^-3 + 0.25 w^-4
  CHECK(comb.H(2.0) == doctest::Approx(std::pow(2.0, -3.0) + 0.25 * std::pow(2.0, -4.0))
                           .epsilon(1e-14));
  CHECK(decay_check(sp, comb));
}

TEST_CASE("bump profile is a flat even bump") {
  const RadialProfile bump = bump_profile(1.0, 0);
  CHECK(bump.support_radius == doctest::Approx(1.0));
  CHECK(bump.H(1.0) == doctest::Approx(1.0).epsilon(1e-14));  // t = 0
  const double w_half = std::cosh(0.5) * std::cosh(0.5);
  // exp(1 - 1/(1 - 0.25)) = exp(-1/3)
  CHECK(bump.H(w_half) == doctest::Approx(std::exp(-1.0 / 3.0)).epsilon(1e-12));
  const double w_out = std::cosh(1.2) * std::cosh(1.2);
  CHECK(bump.H(w_out) == 0.0);
  const double w_edge = std::cosh(1.0) * std::cosh(1.0);
  CHECK(bump.H(w_edge) == 0.0);

  CHECK_THROWS_AS(bump_profile(0.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(bump_profile(1.0, 1), std::invalid_argument);  // m must be even
  CHECK_THROWS_AS(bump_profile(1.0, -2), std::invalid_argument);
}

TEST_CASE("mode function multiplies by the angular factor") {
  RadialProfile prof = bump_profile(1.0, 2);
  const auto mode = mode_function(prof);
  const double t = 0.4, theta = 0.3;
  const double base = prof.H(std::cosh(t) * std::cosh(t));
  const double fac = std::cos(theta) * std::cosh(t);
  CHECK(mode(theta, t) == doctest::Approx(fac * fac * base).epsilon(1e-13));

  RadialProfile radial = bump_profile(1.0, 0);
  const auto mode0 = mode_function(radial);
  CHECK(mode0(1.1, 0.4) == doctest::Approx(base).epsilon(1e-13));
}

TEST_CASE("q=d=1 series function on points") {
  const SpaceParams sp{1, 1, 1, true};
  SeriesParam series;
  series.twice_lambda = 2;  // lambda = 1, mode m = lambda + rho_q = 2
  series.qd1_branch = true;
  const auto psi = psi_qd1_point(sp, series);
  const auto psi_plane = psi_qd1(sp, series);

  const Point x0 = base_point(sp);
  CHECK(std::abs(psi(x0) - std::complex<double>(1.0, 0.0)) < 1e-14);

  // rotate the negative plane by theta: psi picks up e^(2 i theta) and decays
  // like cosh(t)^(-2) in the radial direction
  const Point x = hyperboloid_point(sp, 0.7, nstar_embed(sp, {0.9}));
  const PolarPoint pp = polar_coords(x);
  const std::complex<double> got = psi(x);
  const std::complex<double> expect = psi_plane(pp.theta, 0.0) * std::pow(std::cosh(pp.t), -2.0);
  CHECK(std::abs(got - expect) < 1e-12);

  SeriesParam minus = series;
  minus.twice_lambda = -2;  // mode m = -2
  const auto psi_m = psi_qd1_point(sp, minus);
  CHECK(std::abs(psi_m(x) - std::conj(psi(x))) < 1e-13);
}

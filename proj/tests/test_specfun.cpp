#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hyprad/quadrature.hpp"
#include "hyprad/specfun.hpp"

using namespace hyprad;

TEST_CASE("log gamma matches reference values") {
  CHECK(gamma_ln(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(gamma_ln(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(gamma_ln(0.5) == doctest::Approx(0.57236494292470009).epsilon(1e-14));
  CHECK(gamma_ln(4.7) == doctest::Approx(2.7364051463155667).epsilon(1e-14));
  CHECK(gamma_ln(0.1) == doctest::Approx(2.2527126517342060).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_ln(0.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_ln(-2.5), std::invalid_argument);
}

TEST_CASE("beta function") {
  CHECK(beta_fn(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta_fn(2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(beta_fn(2.5, 0.5) == doctest::Approx(1.1780972450961724).epsilon(1e-13));
}

TEST_CASE("gauss 2F1 series and polynomial cases") {
  // 2F1(1/2,1/2;3/2;z^2) = asin(z)/z at z^2 = 1/2: pi sqrt(2)/4
  CHECK(gauss_2f1(0.5, 0.5, 1.5, 0.5) == doctest::Approx(1.1107207345395916).epsilon(1e-13));
  CHECK(gauss_2f1(0.3, 1.7, 2.4, 0.6) == doctest::Approx(1.1948003346493729).epsilon(1e-13));
  // 2F1(a,b;b;z) = (1-z)^(-a)
  CHECK(gauss_2f1(2.0, 1.3, 1.3, 0.25) ==
        doctest::Approx(1.0 / (0.75 * 0.75)).epsilon(1e-13));
  // polynomial case terminates for any z, here z > 1
  CHECK(gauss_2f1(-3.0, 2.2, 1.1, 1.8) == doctest::Approx(-4.2576589861751152).epsilon(1e-13));
  CHECK(gauss_2f1(1.0, 0.0, 3.0, 0.7) == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, 1.5, 1.5), std::invalid_argument);   // non-terminating, z>1
  CHECK_THROWS_AS(gauss_2f1(0.5, 0.5, -1.0, 0.5), std::invalid_argument);  // c pole
}

TEST_CASE("Ferrers Legendre function") {
  // P^(-1/2)_(1/2)(0) = sqrt(2/pi)
  CHECK(legendre_p(-0.5, 0.5, 0.0) == doctest::Approx(0.79788456080286536).epsilon(1e-13));
  CHECK(legendre_p(-0.3, 0.8, 0.4) == doctest::Approx(0.64123801891069316).epsilon(1e-13));
  // P^0_1(y) = y
  CHECK(legendre_p(0.0, 1.0, 0.35) == doctest::Approx(0.35).epsilon(1e-13));
  CHECK_THROWS_AS(legendre_p(-0.5, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("kernel integral: closed form equals quadrature") {
  // int_0^inf (1+x^2-2 tanh(s) x)^(-nu) x^(mu-1) dx
  CHECK(gr_integral_closed(1.0, 1.0, 0.0) == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  QuadConfig quad;
  quad.rel_tol = 1e-11;
  quad.abs_tol = 1e-14;
  CHECK(gr_integral_numeric(1.0, 2.0, 0.0, quad).value ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-10));
  CHECK(gr_integral_closed(1.3, 2.1, 0.7) == doctest::Approx(2.3877560159881519).epsilon(1e-12));
  CHECK(gr_integral_numeric(1.3, 2.1, 0.7, quad).value ==
        doctest::Approx(2.3877560159881519).epsilon(1e-10));
  CHECK(gr_integral_numeric(0.4, 3.0, -1.2, quad).value ==
        doctest::Approx(1.2040655804551519).epsilon(1e-10));
  CHECK(gr_integral_closed(0.4, 3.0, -1.2) == doctest::Approx(1.2040655804551519).epsilon(1e-12));

  // convergence requires 0 < mu < 2 nu
  CHECK_THROWS_AS(gr_integral_closed(3.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(gr_integral_closed(-0.5, 1.0, 0.0), std::invalid_argument);
}

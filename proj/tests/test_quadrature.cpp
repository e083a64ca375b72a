#include <cmath>

#include "doctest.h"
#include "hyprad/quadrature.hpp"

using namespace hyprad;

TEST_CASE("adaptive GK15 on polynomials and sin") {
  auto cube = [](double x) { return x * x * x; };
  const Integral a = integrate_adaptive<double>(cube, 0.0, 1.0, 1e-12, 1e-15);
  CHECK(a.value == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(a.evaluations == 15);  // degree 3 is exact at one panel

  auto f = [](double x) { return std::sin(x); };
  const Integral b = integrate_adaptive<double>(f, 0.0, M_PI, 1e-12, 1e-15);
  CHECK(b.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("adaptive GK15 refines a sharp peak") {
  auto peak = [](double x) {
    const double d = x - 0.3333;
    return 1.0 / (1e-6 + d * d);
  };
  const Integral a = integrate_adaptive<double>(peak, 0.0, 1.0, 1e-10, 1e-10);
  // exact: (atan((1-c)/w) + atan(c/w)) / w, w = 1e-3, c = 0.3333
  const double w = 1e-3;
  const double exact = (std::atan((1.0 - 0.3333) / w) + std::atan(0.3333 / w)) / w;
  CHECK(a.value == doctest::Approx(exact).epsilon(1e-9));
  CHECK(a.evaluations > 15);
}

TEST_CASE("adaptive GK15 throws when the subdivision budget is exhausted") {
  auto rough = [](double x) { return 1.0 / std::sqrt(std::fabs(x - 0.3)); };
  CHECK_THROWS_AS((integrate_adaptive<double>(rough, 0.0, 1.0, 1e-14, 1e-16, 3)),
                  QuadratureError);
}

TEST_CASE("half-line maps integrate exp(-x) with both truncations") {
  QuadConfig cfg;
  auto f = [](double x) { return std::exp(-x); };
  cfg.truncation = QuadConfig::Truncation::tangent_map;
  const Integral a = integrate_half_line<double>(f, 0.0, 1.0, cfg, 1e-11, 1e-13);
  CHECK(a.value == doctest::Approx(1.0).epsilon(1e-10));

  cfg.truncation = QuadConfig::Truncation::exponential_map;
  const Integral b = integrate_half_line<double>(f, 0.0, 1.0, cfg, 1e-11, 1e-13);
  CHECK(b.value == doctest::Approx(1.0).epsilon(1e-10));

  // shifted lower endpoint
  const Integral c = integrate_half_line<double>(f, 2.0, 1.0, cfg, 1e-11, 1e-13);
  CHECK(c.value == doctest::Approx(std::exp(-2.0)).epsilon(1e-10));
}

TEST_CASE("real-line map integrates the Gaussian") {
  QuadConfig cfg;
  auto f = [](double x) { return std::exp(-x * x); };
  const Integral a = integrate_real_line<double>(f, 1.0, cfg, 1e-11, 1e-13);
  CHECK(a.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-10));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  const Integral a = integrate_tanh_sinh(f, 0.0, 1.0, 1e-12, 1e-14);
  CHECK(a.value == doctest::Approx(2.0).epsilon(1e-11));

  auto g = [](double x) { return std::log(x); };
  const Integral b = integrate_tanh_sinh(g, 0.0, 1.0, 1e-12, 1e-14);
  CHECK(b.value == doctest::Approx(-1.0).epsilon(1e-11));
}

TEST_CASE("quadrature is deterministic across repeated runs") {
  auto f = [](double x) { return std::cos(3.0 * x) / (1.0 + x * x); };
  const Integral a = integrate_adaptive<double>(f, -2.0, 5.0, 1e-10, 1e-12);
  const Integral b = integrate_adaptive<double>(f, -2.0, 5.0, 1e-10, 1e-12);
  CHECK(a.value == b.value);  // bit-identical
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("gauss_legendre nodes and weights") {
  std::vector<double> x, w;
  gauss_legendre(2, x, w);
  REQUIRE(x.size() == 2);
  CHECK(x[0] == doctest::Approx(-0.57735026918962576).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(0.57735026918962576).epsilon(1e-14));
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w[1] == doctest::Approx(1.0).epsilon(1e-14));

  gauss_legendre(13, x, w);
  double wsum = 0.0, x7 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    wsum += w[i];
    x7 += w[i] * std::pow(x[i], 12);  // exact for degree <= 2n-1
  }
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x7 == doctest::Approx(2.0 / 13.0).epsilon(1e-13));
}

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hyprad/geometry.hpp"

using namespace hyprad;

namespace {

double norm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("base point lies on the hyperboloid") {
  const Point x0 = base_point({2, 1, 3, true});
  CHECK(x0.form() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(x0.coords.size() == 2u * 6);
  const PolarPoint pp = polar_coords(x0);
  CHECK(pp.t == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(base_point({8, 0, 1, true}), std::invalid_argument);
}

TEST_CASE("hyperboloid points satisfy [x,x] = -1 on every chart") {
  const std::vector<SpaceParams> charts = {
      {1, 0, 2, true}, {1, 0, 4, false}, {2, 0, 4, true},
      {1, 2, 1, true}, {2, 1, 1, true},  {4, 0, 1, true},
  };
  for (const SpaceParams& sp : charts) {
    const DerivedConstants dc = derive_constants(sp);
    std::vector<double> free_coords(dc.nstar_dim);
    for (int i = 0; i < dc.nstar_dim; ++i) free_coords[i] = 0.3 * (i + 1) - 0.8;
    for (double s : {-1.2, 0.0, 0.9}) {
      const Point x = hyperboloid_point(sp, s, nstar_embed(sp, free_coords));
      CHECK(std::fabs(x.form() + 1.0) < 1e-12);
    }
  }
}

TEST_CASE("frozen chart point on (1,0,4)") {
  const SpaceParams sp{1, 0, 4, false};
  const std::vector<double> free_coords = {0.25, -0.75, 0.5, 1.0};
  const double s = 0.5;
  const Point x = hyperboloid_point(sp, s, nstar_embed(sp, free_coords));
  REQUIRE(x.coords.size() == 6);
  // v = -sinh(s) + e^s |y|^2/2 with |y|^2 = 1.875
  const ReducedCoords rc = reduced_coords(sp, s, 0.0, std::sqrt(1.875), 0.0);
  CHECK(rc.v == doctest::Approx(1.0245808857876228).epsilon(1e-14));
  CHECK(rc.cosh2_t == doctest::Approx(2.0497659915213497).epsilon(1e-14));
  CHECK(rc.cos_theta_cosh_t == doctest::Approx(-0.41805022607498935).epsilon(1e-13));

  const PolarPoint pp = polar_coords(x);
  CHECK(pp.t == doctest::Approx(0.89864852753763161).epsilon(1e-13));
  // non-projective q > 1: theta in [0, pi], signed cosine
  CHECK(std::cos(pp.theta) * std::cosh(pp.t) ==
        doctest::Approx(-0.41805022607498935).epsilon(1e-13));
  // p = 0 non-projective: signed sinh(t) is the first coordinate, equal to -v
  CHECK(x.coords[0] == doctest::Approx(-1.0245808857876228).epsilon(1e-13));
}

TEST_CASE("polar and reduced coordinates agree on a p >= q chart") {
  const SpaceParams sp{2, 1, 1, true};
  const std::vector<double> free_coords = {0.4, -0.7, 0.6};  // v (2 reals), w (1 real)
  const double s = -0.35;
  const NStarCoords n = nstar_embed(sp, free_coords);
  REQUIRE(n.v.size() == 2);
  REQUIRE(n.u.empty());
  REQUIRE(n.w.size() == 1);
  const Point x = hyperboloid_point(sp, s, n);
  CHECK(std::fabs(x.form() + 1.0) < 1e-13);

  const ReducedCoords rc = reduced_coords(sp, s, norm(n.v), norm(n.u), std::exp(s) * norm(n.w));
  const PolarPoint pp = polar_coords(x);
  const double ch = std::cosh(pp.t);
  CHECK(ch * ch == doctest::Approx(rc.cosh2_t).epsilon(1e-13));
  CHECK(std::fabs(std::cos(pp.theta)) * ch ==
        doctest::Approx(std::sqrt(rc.cos2theta_cosh2t)).epsilon(1e-12));
  // p >= q: the kernel coordinate never drops below sinh(s)
  CHECK(rc.v >= std::sinh(s));
  CHECK(rc.cos_theta_cosh_t >= std::cosh(s) - 1e-15);
}

TEST_CASE("q=d=1 theta is taken mod pi") {
  const SpaceParams sp{1, 1, 1, true};
  const Point x = hyperboloid_point(sp, 0.2, nstar_embed(sp, {1.5}));
  const PolarPoint pp = polar_coords(x);
  CHECK(pp.theta >= 0.0);
  CHECK(pp.theta < M_PI);

  // antipode maps to the same projective angle
  Point y = x;
  for (double& c : y.coords) c = -c;
  const PolarPoint qq = polar_coords(y);
  CHECK(qq.theta == doctest::Approx(pp.theta).epsilon(1e-13));
  CHECK(qq.t == doctest::Approx(pp.t).epsilon(1e-13));
}

TEST_CASE("nstar_embed validates the length") {
  CHECK_THROWS_AS(nstar_embed({1, 0, 4, true}, {1.0, 2.0}), std::invalid_argument);
  CHECK_THROWS_AS(hyperboloid_point({8, 0, 1, true}, 0.0, NStarCoords{}),
                  std::invalid_argument);
}

#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "hyprad/spaces.hpp"

using namespace hyprad;

TEST_CASE("validate_space accepts the classification and rejects the rest") {
  CHECK_NOTHROW(validate_space({1, 0, 1, true}));
  CHECK_NOTHROW(validate_space({1, 3, 2, false}));
  CHECK_NOTHROW(validate_space({4, 2, 5, true}));
  CHECK_NOTHROW(validate_space({8, 0, 1, true}));
  CHECK_THROWS_AS(validate_space({3, 0, 1, true}), std::invalid_argument);
  CHECK_THROWS_AS(validate_space({1, -1, 1, true}), std::invalid_argument);
  CHECK_THROWS_AS(validate_space({1, 0, 0, true}), std::invalid_argument);
  CHECK_THROWS_AS(validate_space({8, 1, 1, true}), std::invalid_argument);
  CHECK_THROWS_AS(validate_space({8, 0, 2, true}), std::invalid_argument);
  CHECK_THROWS_AS(validate_space({2, 0, 1, false}), std::invalid_argument);  // only d=1 non-proj
}

TEST_CASE("derived constants for p < q") {
  const DerivedConstants dc = derive_constants({1, 0, 4, true});
  CHECK(dc.twice_rho_q == 4);
  CHECK(dc.twice_rho_1 == 4);
  CHECK(dc.alpha == -1);
  REQUIRE(dc.beta.has_value());
  CHECK(*dc.beta == 3);
  REQUIRE(dc.k0.has_value());
  CHECK(*dc.k0 == 1);
  CHECK(dc.nstar_dim == 4);
  CHECK(dc.block_dims[0] == 0);
  CHECK(dc.block_dims[1] == 4);
  CHECK(dc.block_dims[2] == 0);

  const DerivedConstants dq = derive_constants({2, 3, 5, true});
  CHECK(dq.twice_rho_q == 18);
  CHECK(dq.twice_rho_1 == 6);
  CHECK(dq.alpha == 5);
  CHECK(*dq.beta == 3);
  CHECK(*dq.k0 == 1);
  CHECK(dq.nstar_dim == 11);
  CHECK(dq.block_dims[0] == 6);
  CHECK(dq.block_dims[1] == 4);
  CHECK(dq.block_dims[2] == 1);

  // even beta: k0 = beta/2
  const DerivedConstants de = derive_constants({1, 0, 5, false});
  CHECK(*de.beta == 4);
  CHECK(*de.k0 == 2);
}

TEST_CASE("derived constants for p >= q have no beta/k0") {
  const DerivedConstants dc = derive_constants({1, 2, 1, true});
  CHECK(dc.twice_rho_q == 3);
  CHECK(dc.twice_rho_1 == 1);
  CHECK_FALSE(dc.beta.has_value());
  CHECK_FALSE(dc.k0.has_value());
  CHECK(dc.nstar_dim == 2);
  CHECK(dc.block_dims[0] == 1);  // d(p-q)
  CHECK(dc.block_dims[1] == 1);  // dq
  CHECK(dc.block_dims[2] == 0);

  const DerivedConstants d2 = derive_constants({2, 1, 1, true});
  CHECK(d2.twice_rho_q == 6);
  CHECK(d2.twice_rho_1 == 2);
  CHECK(d2.nstar_dim == 3);
}

TEST_CASE("series enumeration on a projective space") {
  // lambda = (dq-dp)/2 - 1 + mu, mu even; spherical iff mu <= 0
  const auto series = enumerate_series({2, 0, 4, true}, 5.5);
  REQUIRE(series.size() == 3);
  CHECK(series[0].twice_lambda == 2);
  CHECK(series[0].mu == -2);
  CHECK(series[0].spherical);
  CHECK(series[0].exceptional);
  CHECK_FALSE(series[0].cuspidal);
  CHECK(series[1].twice_lambda == 6);
  CHECK(series[1].mu == 0);
  CHECK(series[1].spherical);
  CHECK_FALSE(series[1].exceptional);
  CHECK_FALSE(series[1].cuspidal);
  CHECK(series[2].twice_lambda == 10);
  CHECK(series[2].mu == 2);
  CHECK_FALSE(series[2].spherical);
  CHECK(series[2].cuspidal);
}

TEST_CASE("series enumeration on the d=8 space") {
  const auto series = enumerate_series({8, 0, 1, true}, 6.0);
  REQUIRE(series.size() == 3);
  CHECK(series[0].lambda() == 1.0);
  CHECK(series[0].mu == -2);
  CHECK(series[0].spherical);
  CHECK(series[1].lambda() == 3.0);
  CHECK(series[1].mu == 0);
  CHECK(series[1].spherical);
  CHECK(series[2].lambda() == 5.0);
  CHECK(series[2].cuspidal);
}

TEST_CASE("non-projective series are all cuspidal for p=0, q=2") {
  const auto series = enumerate_series({1, 0, 2, false}, 3.0);
  REQUIRE(series.size() == 3);  // lambda = mu = 1, 2, 3
  for (const SeriesParam& sp : series) {
    CHECK(sp.mu > 0);
    CHECK(sp.cuspidal);
    CHECK_FALSE(sp.spherical);
  }
  CHECK(noncuspidal_parameters({1, 0, 2, false}).empty());
}

TEST_CASE("q=d=1 projective branch lists both signs") {
  const auto series = enumerate_series({1, 1, 1, true}, 3.0);
  REQUIRE(series.size() == 4);
  CHECK(series[0].twice_lambda == -6);
  CHECK(series[1].twice_lambda == -2);
  CHECK(series[2].twice_lambda == 2);
  CHECK(series[3].twice_lambda == 6);
  for (const SeriesParam& sp : series) {
    CHECK(sp.qd1_branch);
    CHECK(sp.cuspidal);
    // |lambda| + rho_q is an even integer
    CHECK((std::abs(sp.twice_lambda) + 2) % 4 == 0);
  }

  // p=0: 2 rho_q = 1, so twice_lambda is odd (half-integer lambda)
  const auto half = enumerate_series({1, 0, 1, true}, 4.0);
  REQUIRE(half.size() == 4);
  CHECK(half[0].twice_lambda == -7);
  CHECK(half[1].twice_lambda == -3);
  CHECK(half[2].twice_lambda == 3);
  CHECK(half[3].twice_lambda == 7);
}

TEST_CASE("noncuspidal parameters step by 2 in lambda") {
  const auto a = noncuspidal_parameters_twice({1, 0, 4, true});
  REQUIRE(a.size() == 1);
  CHECK(a[0] == 2);

  const auto b = noncuspidal_parameters_twice({2, 0, 4, true});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == 6);
  CHECK(b[1] == 2);

  const auto c = noncuspidal_parameters({1, 0, 7, false});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == doctest::Approx(2.5));
  CHECK(c[1] == doctest::Approx(0.5));

  CHECK_THROWS_AS(noncuspidal_parameters({1, 1, 1, true}), std::invalid_argument);
}

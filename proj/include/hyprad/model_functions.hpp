#pragma once

#include <complex>
#include <functional>
#include <limits>

#include "hyprad/geometry.hpp"
#include "hyprad/spaces.hpp"

namespace hyprad {

// Certificate for |H(w)| <= C * w^(-(rho_q + m)/2) * (1 + log w)^(-N) on
// w >= 1. N is the logarithmic decay order the Radon convergence estimates
// consume; H_power (when finite) records the actual power-law order of H,
// i.e. |H(w)| = O(w^(-H_power)).
struct DecayCertificate {
  double C = 1.0;
  int N = 3;
  double H_power = std::numeric_limits<double>::quiet_NaN();
};

// Radial model function: f(k_theta a_t) = (cos theta cosh t)^m * H(cosh^2 t).
// support_radius < inf marks compact support in t. H_signed, present only
// for p=0 non-projective profiles, is the profile in the signed kernel
// coordinate v = -sinh t.
struct RadialProfile {
  std::function<double(double)> H;
  int m = 0;
  DecayCertificate decay;
  double support_radius = std::numeric_limits<double>::infinity();
  std::function<double(double)> H_signed;
};

// Checks the certificate bound on the dyadic grid w = 2^k, k = 0..30.
bool decay_check(const SpaceParams& sp, const RadialProfile& profile);

// psi~_lambda: m = 0, H(w) = w^(-(lambda + rho_q)/2). Requires
// lambda + rho_q > 0. The certificate constant is the analytic supremum of
// w^(-lambda/2) (1 + log w)^N for lambda > 0 and a grid supremum otherwise.
RadialProfile psi_tilde(const SpaceParams& sp, double lambda, int N = 3);

// psi~_lambda + sum_j coeffs[j] * psi~_(lambda + 2(j+1)); certificates add.
RadialProfile psi_combination(const SpaceParams& sp, double lambda,
                              const std::vector<double>& coeffs, int N = 3);

// Flat bump: H = exp(1 - 1/(1 - (t/R)^2)) for t < R, 0 beyond; H(1) = 1 at
// t = 0 and all derivatives vanish at t = R. m must be even.
RadialProfile bump_profile(double R, int m = 0);

// The profile as a function of (theta, t).
std::function<double(double, double)> mode_function(const RadialProfile& profile);

// q = d = 1 projective series function on the (theta, s)-plane:
// exp(i m theta) (cosh s)^(-|lambda| - rho_q), m = lambda + sign(lambda) rho_q.
std::function<std::complex<double>(double, double)> psi_qd1(const SpaceParams& sp,
                                                            const SeriesParam& series);

// Its extension to arbitrary hyperboloid points through the oriented
// negative-plane coordinate zeta = x_last + i x_B; even m makes it well
// defined on the projective quotient.
std::function<std::complex<double>(const Point&)> psi_qd1_point(const SpaceParams& sp,
                                                                const SeriesParam& series);

}  // namespace hyprad

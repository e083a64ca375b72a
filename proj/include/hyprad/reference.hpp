#pragma once

#include <vector>

#include "hyprad/transforms.hpp"

namespace hyprad {

// Closed form of the reduced Radon transform of psi~_lambda up to the
// multiplicative constant C_lambda:
//   e^{-ds} (1+e^{-2s})^{-mu/2} 2F1(mu/2, 1-mu/2; (mu+dq-dp)/2; 1/(1+e^{-2s}))
// with mu = lambda - (dq-dp)/2 + 1. Requires p < q and lambda > 0.
double radon_shape_closed(const SpaceParams& sp, double lambda, double s);

// For even mu <= 0 the shape is an exponential polynomial:
// e^{ds} * shape = sum_i coeffs[i] * e^{-2 i s}, i = 0 .. -mu/2.
std::vector<double> shape_exponential_coeffs(const SpaceParams& sp, double lambda);

// The constant C_lambda = radon_reduced(psi~_lambda)(0) / shape(lambda, 0),
// with a constancy check of the ratio over s in {-1.5,-0.5,0.5,1.5}.
struct CLambdaFit {
  double value = 0.0;
  double spread = 0.0;  // (max ratio - min ratio) / |value|
  bool ok = false;
  GridSeries ratios;
};
CLambdaFit fit_C_lambda(const SpaceParams& sp, double lambda, const QuadConfig& quad = {});

// Combination coefficients C_j making psi_lambda = psi~_lambda +
// sum_j C_j psi~_{lambda+2j} have a pure e^{lambda s} Abel asymptotic when
// mu < 0 (exceptional spherical series). Solved from the fitted C-constants
// and the shape exponential coefficients; empty when mu = 0.
std::vector<double> exceptional_combination(const SpaceParams& sp, double lambda,
                                            const QuadConfig& quad = {});

// j-th z-derivative of S(z) = ((v-z)^2+u^2)^{m/2} (1+2zv-z^2)^delta, both by
// exact term rewriting and by Richardson-extrapolated central differences.
// Valid for 0 <= j < delta + 1 (the rewriting needs no negative B-powers
// beyond that). m even >= 0.
struct LemmaCheckResult {
  double analytic = 0.0;
  double numeric = 0.0;
};
LemmaCheckResult s_derivative_lemma_check(int m, double delta, double v, double u, int j, double z);

// Exact z-derivative of the kernel at z = 0 as a polynomial evaluator; used
// by the Taylor coefficients below and exposed for tests.
double s_derivative_at_zero(int m, double delta, int j, double v, double u);

// Asymptotic data of F(z) = e^{ds} * (reduced Radon)(s), z = e^{-s}:
// coefficients c_j = S-derivative integrals for j < k0, remainder samples
// (F - sum c_j z^j)/z^{k0} on an s-grid up to s_max, and the remainder at
// s_max as the constant-term estimate.
struct TaylorReport {
  std::vector<double> coefficients;
  GridSeries remainder_samples;
  double constant_term_estimate = 0.0;
};
TaylorReport taylor_report(const SpaceParams& sp, const RadialProfile& profile,
                           const QuadConfig& quad = {}, double s_max = 4.0);

// Reduction to real rank one base field: for d in {2,4} the reduced Radon
// transform on (d,p,q) equals e^{-(d-1)s} times the one on
// (1, d(p+1)-1, d(q+1)-1) for the same psi~_lambda, after sphere
// normalization. Returns the grid of normalized ratios (constant, and 1
// when the two sphere-factor multisets coincide, e.g. p = 0).
GridSeries reduction_check(const SpaceParams& sp, double lambda, const std::vector<double>& s_grid,
                           const QuadConfig& quad = {});

}  // namespace hyprad

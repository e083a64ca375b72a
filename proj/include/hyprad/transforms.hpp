#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyprad/model_functions.hpp"
#include "hyprad/quadrature.hpp"

namespace hyprad {

// Values (with error estimates) sampled on an increasing s-grid.
struct GridSeries {
  std::vector<double> s_values;
  std::vector<double> values;
  std::vector<double> error_estimates;
};

// Reduced horospherical Radon transform of a radial profile at a_s:
//   e^{-ds} * int H(cosh^2 t) * (signed or squared kernel)^(m-power)
//            * y^beta * x^alpha * z^(d-2) dy dx dz
// in the scalar chart coordinates (x innermost absent for p=0, z absent for
// d=1, y parametrizes the kernel coordinate v = -sinh s + e^s y^2/2).
// Requires p < q, d <= 4, and (projective or d=1). Sphere factors of the
// angular directions are not included; see sphere_factor.
Integral radon_reduced(const SpaceParams& sp, const RadialProfile& profile, double s,
                       const QuadConfig& quad = {});

// Full Radon transform: the N*-chart integral of a pointwise function over
// all nstar_dim free coordinates (requires nstar_dim <= 4, d <= 4). With
// quad.mc_samples > 0 a deterministic Halton quasi-Monte Carlo estimate is
// used instead of nested adaptive quadrature.
Integral radon_full(const SpaceParams& sp, const std::function<double(const Point&)>& f, double s,
                    const QuadConfig& quad = {});
IntegralC radon_full_complex(const SpaceParams& sp,
                             const std::function<std::complex<double>(const Point&)>& f, double s,
                             const QuadConfig& quad = {});

// Product of the unit-sphere volumes of the angular directions that the
// reduced transform integrates out: radon_full = sphere_factor * radon_reduced
// for rotation-invariant integrands.
double sphere_factor(const SpaceParams& sp);

// Abel transform value: e^{rho_1 s} * radon_value.
double abel(const SpaceParams& sp, double radon_value, double s);
GridSeries abel_series(const SpaceParams& sp, const GridSeries& radon_values);

// Radial part of the Laplace–Beltrami operator on profiles phi(t):
//   phi'' + ((dp+d-1) coth t + (dq+d-1) tanh t) phi'
// Central differences with one Richardson step; near t = 0 an even quartic
// fit in t^2 removes the coth singularity.
double radial_laplacian(const SpaceParams& sp, const std::function<double(double)>& phi, double t,
                        double h_step = 0.01);

// The downstairs differential operator D = d^2/ds^2 * prod_j (d^2/ds^2 -
// lambda_j^2) over the non-cuspidal lambda_j, discretized on the uniform
// grid of the input series with fourth-order five-point stencils. Each
// factor subtracts the stencil's own eigenvalue on e^{+-lambda_j s} rather
// than lambda_j^2, so those grid exponentials are annihilated exactly; the
// two shifts agree to O(h^4). Requires h <= 0.04.
GridSeries apply_D_downstairs(const SpaceParams& sp, const GridSeries& abel_values);

// Reduced Radon transform of a compactly supported profile on an s-grid by
// fixed-panel Gauss-Legendre quadrature. Panel geometry moves smoothly with
// s, so the output is numerically differentiable in s (unlike the adaptive
// evaluator, whose pointwise error is not smooth).
GridSeries radon_grid(const SpaceParams& sp, const RadialProfile& profile,
                      const std::vector<double>& s_values, int panels = 16, int order = 16);

}  // namespace hyprad

#pragma once

#include "hyprad/quadrature.hpp"

namespace hyprad {

// log Gamma for x > 0 (reflection handles x in (0, 1/2)); Lanczos g=7.
double gamma_ln(double x);

// Euler beta through gamma_ln; a, b > 0.
double beta_fn(double a, double b);

struct Hyp2F1Args {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double z = 0.0;
};

// Gauss 2F1(a,b;c;z). Terminates exactly when a or b is a non-positive
// integer (polynomial case, any real z); otherwise sums the power series for
// 0 <= z < 1 with term-ratio stopping at 1e-16 relative.
double gauss_2f1(const Hyp2F1Args& args);
inline double gauss_2f1(double a, double b, double c, double z) {
  return gauss_2f1({a, b, c, z});
}

// Ferrers function P^order_degree(y) for |y| < 1, order < 1:
//   ((1+y)/(1-y))^(order/2) / Gamma(1-order) * 2F1(-degree, degree+1; 1-order; (1-y)/2)
double legendre_p(double order, double degree, double y);

// closed form of I(mu, nu, s) = int_0^inf (1 + x^2 - 2 tanh(s) x)^(-nu) x^(mu-1) dx:
//   B(mu, 2nu-mu) (2 cosh(s) e^s)^(nu-1/2) 2F1(nu-mu+1/2, mu-nu+1/2; nu+1/2; 1/(1+e^(-2s)))
// Requires 0 < mu < 2 nu.
double gr_integral_closed(double mu, double nu, double s);

// The same integral by quadrature: tanh-sinh on [0,1] plus the x -> 1/x
// reflection of the tail, which has an integrable endpoint power at 0.
Integral gr_integral_numeric(double mu, double nu, double s, const QuadConfig& quad = {});

}  // namespace hyprad

#include "hyprad/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace hyprad {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_ln(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x + 6.5;  // x + g - 1/2
  return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

bool is_nonpositive_integer(double v, int* n = nullptr) {
  if (v > 1e-12) return false;
  const double r = std::round(v);
  if (std::fabs(v - r) > 1e-12) return false;
  if (n) *n = static_cast<int>(-r);
  return true;
}

}  // namespace

double gamma_ln(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("gamma_ln: requires x > 0");
  if (x < 0.5) {
    // reflection: log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x)
    return std::log(M_PI / std::sin(M_PI * x)) - lanczos_ln(1.0 - x);
  }
  return lanczos_ln(x);
}

double beta_fn(double a, double b) {
  return std::exp(gamma_ln(a) + gamma_ln(b) - gamma_ln(a + b));
}

double gauss_2f1(const Hyp2F1Args& args) {
  const double a = args.a, b = args.b, c = args.c, z = args.z;
  int na = 0, nb = 0;
  const bool pa = is_nonpositive_integer(a, &na);
  const bool pb = is_nonpositive_integer(b, &nb);
  if (pa || pb) {
    // Polynomial of degree n; c may only hit a pole past the truncation.
    const int n = pa && pb ? std::min(na, nb) : (pa ? na : nb);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < n; ++k) {
      const double ck = c + k;
      if (std::fabs(ck) < 1e-12) {
        throw std::invalid_argument("gauss_2f1: c hits a non-positive integer inside the sum");
      }
      term *= (a + k) * (b + k) / (ck * (k + 1.0)) * z;
      sum += term;
    }
    return sum;
  }
  if (is_nonpositive_integer(c)) {
    throw std::invalid_argument("gauss_2f1: c is a non-positive integer");
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw std::invalid_argument("gauss_2f1: series requires 0 <= z < 1");
  }
  double term = 1.0;
  double sum = 1.0;
  for (long k = 0; k < 2000000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (std::fabs(term) <= 1e-16 * std::fabs(sum)) return sum;
  }
  throw QuadratureError("gauss_2f1: series did not converge");
}

double legendre_p(double order, double degree, double y) {
  if (!(std::fabs(y) < 1.0)) throw std::invalid_argument("legendre_p: requires |y| < 1");
  if (!(order < 1.0)) throw std::invalid_argument("legendre_p: requires order < 1");
  const double pref = std::exp(0.5 * order * (std::log1p(y) - std::log1p(-y)) - gamma_ln(1.0 - order));
  return pref * gauss_2f1(-degree, degree + 1.0, 1.0 - order, 0.5 * (1.0 - y));
}

double gr_integral_closed(double mu, double nu, double s) {
  if (!(mu > 0.0 && mu < 2.0 * nu)) {
    throw std::invalid_argument("gr_integral_closed: requires 0 < mu < 2 nu");
  }
  const double z = 1.0 / (1.0 + std::exp(-2.0 * s));
  const double pref = std::pow(2.0 * std::cosh(s) * std::exp(s), nu - 0.5);
  return beta_fn(mu, 2.0 * nu - mu) * pref *
         gauss_2f1(nu - mu + 0.5, mu - nu + 0.5, nu + 0.5, z);
}

Integral gr_integral_numeric(double mu, double nu, double s, const QuadConfig& quad) {
  if (!(mu > 0.0 && mu < 2.0 * nu)) {
    throw std::invalid_argument("gr_integral_numeric: requires 0 < mu < 2 nu");
  }
  const double T = std::tanh(s);
  auto kernel = [T, nu](double x) { return std::pow(1.0 + x * x - 2.0 * T * x, -nu); };
  // head: x in [0,1], integrand kernel * x^(mu-1)
  auto head = [&](double x) { return kernel(x) * std::pow(x, mu - 1.0); };
  // tail via x -> 1/x: int_0^1 (x^2 + 1 - 2 T x)^(-nu) x^(2 nu - mu - 1) dx
  auto tail = [&](double x) { return kernel(x) * std::pow(x, 2.0 * nu - mu - 1.0); };
  const Integral h = integrate_tanh_sinh(head, 0.0, 1.0, quad.rel_tol, 0.5 * quad.abs_tol);
  const Integral t = integrate_tanh_sinh(tail, 0.0, 1.0, quad.rel_tol, 0.5 * quad.abs_tol);
  return {h.value + t.value, h.error + t.error, h.evaluations + t.evaluations};
}

}  // namespace hyprad

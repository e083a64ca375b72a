#include "hyprad/model_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hyprad {

namespace {

// sup over w >= 1 of w^(-lam/2) (1 + log w)^N; for lam <= 0 the supremum is
// taken over the checked dyadic range only (the bound is then a statement
// about that range, not an asymptotic one).
double certificate_constant(double lam, int N) {
  if (N <= 0) return 1.0;
  if (lam > 0.0) {
    const double L = 2.0 * N / lam - 1.0;  // stationary point of the log-ratio
    if (L <= 0.0) return 1.0;
    return std::exp(-0.5 * lam * L) * std::pow(2.0 * N / lam, N);
  }
  const double L = 31.0 * std::log(2.0);
  return std::exp(-0.5 * lam * L) * std::pow(1.0 + L, N);
}

}  // namespace

bool decay_check(const SpaceParams& sp, const RadialProfile& profile) {
  const DerivedConstants dc = derive_constants(sp);
  const double half_power = 0.5 * (dc.rho_q() + profile.m);
  for (int k = 0; k <= 30; ++k) {
    const double w = std::ldexp(1.0, k);
    const double bound = profile.decay.C * std::pow(w, -half_power) *
                         std::pow(1.0 + std::log(w), -profile.decay.N);
    if (std::fabs(profile.H(w)) > bound * (1.0 + 1e-12)) return false;
  }
  return true;
}

RadialProfile psi_tilde(const SpaceParams& sp, double lambda, int N) {
  const DerivedConstants dc = derive_constants(sp);
  const double rho = dc.rho_q();
  if (!(lambda + rho > 0.0)) throw std::invalid_argument("psi_tilde: requires lambda + rho_q > 0");
  const double e = 0.5 * (lambda + rho);
  RadialProfile prof;
  prof.H = [e](double w) { return std::pow(w, -e); };
  prof.m = 0;
  prof.decay = {certificate_constant(lambda, N), N, e};
  return prof;
}

RadialProfile psi_combination(const SpaceParams& sp, double lambda,
                              const std::vector<double>& coeffs, int N) {
  const DerivedConstants dc = derive_constants(sp);
  const double rho = dc.rho_q();
  if (!(lambda + rho > 0.0)) {
    throw std::invalid_argument("psi_combination: requires lambda + rho_q > 0");
  }
  std::vector<double> cs = coeffs;
  RadialProfile prof;
  const double e0 = 0.5 * (lambda + rho);
  prof.H = [e0, cs](double w) {
    double acc = std::pow(w, -e0);
    for (std::size_t j = 0; j < cs.size(); ++j) acc += cs[j] * std::pow(w, -(e0 + j + 1.0));
    return acc;
  };
  prof.m = 0;
  double C = certificate_constant(lambda, N);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    C += std::fabs(cs[j]) * certificate_constant(lambda + 2.0 * (j + 1.0), N);
  }
  prof.decay = {C, N, e0};
  return prof;
}

RadialProfile bump_profile(double R, int m) {
  if (!(R > 0.0)) throw std::invalid_argument("bump_profile: requires R > 0");
  if (m % 2 != 0 || m < 0) throw std::invalid_argument("bump_profile: m must be even and >= 0");
  RadialProfile prof;
  prof.H = [R](double w) {
    const double t = std::asinh(std::sqrt(std::max(w - 1.0, 0.0)));
    const double xi = t / R;
    if (xi >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - xi * xi));
  };
  prof.m = m;
  prof.support_radius = R;
  // |H| <= 1 with support in w <= cosh^2 R; the constant below certifies the
  // bound for every space with rho_q + m <= 48.
  const double wmax = std::cosh(R) * std::cosh(R);
  prof.decay = {std::pow(wmax, 24.0) * std::pow(1.0 + std::log(wmax), 8.0), 8,
                std::numeric_limits<double>::infinity()};
  return prof;
}

std::function<double(double, double)> mode_function(const RadialProfile& profile) {
  const auto H = profile.H;
  const int m = profile.m;
  return [H, m](double theta, double t) {
    const double ch = std::cosh(t);
    const double base = std::cos(theta) * ch;
    double k = 1.0;
    for (int i = 0; i < std::abs(m); ++i) k *= base;
    if (m < 0) k = 1.0 / k;
    return k * H(ch * ch);
  };
}

namespace {

int qd1_mode_index(const SpaceParams& sp, const SeriesParam& series) {
  validate_space(sp);
  if (!(sp.projective && sp.q == 1 && sp.d == 1) || !series.qd1_branch) {
    throw std::invalid_argument("psi_qd1: requires the q=d=1 projective branch");
  }
  const DerivedConstants dc = derive_constants(sp);
  const int twice_m = series.twice_lambda + (series.twice_lambda > 0 ? dc.twice_rho_q : -dc.twice_rho_q);
  if (twice_m % 2 != 0) throw std::invalid_argument("psi_qd1: lambda + rho_q must be integral");
  return twice_m / 2;
}

}  // namespace

std::function<std::complex<double>(double, double)> psi_qd1(const SpaceParams& sp,
                                                            const SeriesParam& series) {
  const int m = qd1_mode_index(sp, series);
  const DerivedConstants dc = derive_constants(sp);
  const double e = std::fabs(series.lambda()) + dc.rho_q();
  return [m, e](double theta, double s) {
    return std::polar(std::pow(std::cosh(s), -e), m * theta);
  };
}

std::function<std::complex<double>(const Point&)> psi_qd1_point(const SpaceParams& sp,
                                                                const SeriesParam& series) {
  const int m = qd1_mode_index(sp, series);
  const DerivedConstants dc = derive_constants(sp);
  const double e = std::fabs(series.lambda()) + dc.rho_q();
  const int p = sp.p;
  return [m, e, p](const Point& x) {
    const std::complex<double> zeta(x.coords[static_cast<std::size_t>(p) + 2],
                                    x.coords[static_cast<std::size_t>(p) + 1]);
    const double r = std::abs(zeta);                      // = cosh t
    return std::polar(std::pow(r, -e), m * std::arg(zeta));
  };
}

}  // namespace hyprad

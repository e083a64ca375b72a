#include "hyprad/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "hyprad/specfun.hpp"

namespace hyprad {

namespace {

double derived_mu(const SpaceParams& sp, double lambda) {
  return lambda - 0.5 * (sp.d * sp.q - sp.d * sp.p) + 1.0;
}

void require_shape_domain(const SpaceParams& sp, double lambda) {
  validate_space(sp);
  if (sp.d == 8) throw std::invalid_argument("reference: d=8 is classification-only");
  if (!(sp.p < sp.q)) throw std::invalid_argument("reference: requires p < q");
  if (!(lambda > 0.0)) throw std::invalid_argument("reference: requires lambda > 0");
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double acc = 1.0;
  for (int i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

}  // namespace

double radon_shape_closed(const SpaceParams& sp, double lambda, double s) {
  require_shape_domain(sp, lambda);
  const double mu = derived_mu(sp, lambda);
  const double dqp = sp.d * (sp.q - sp.p);
  const double z = 1.0 / (1.0 + std::exp(-2.0 * s));
  return std::exp(-sp.d * s) * std::pow(1.0 + std::exp(-2.0 * s), -0.5 * mu) *
         gauss_2f1(0.5 * mu, 1.0 - 0.5 * mu, 0.5 * (mu + dqp), z);
}

std::vector<double> shape_exponential_coeffs(const SpaceParams& sp, double lambda) {
  require_shape_domain(sp, lambda);
  const double mu = derived_mu(sp, lambda);
  const double r = std::round(mu);
  if (std::fabs(mu - r) > 1e-9 || r > 0.0 || std::lround(r) % 2 != 0) {
    throw std::invalid_argument("shape_exponential_coeffs: requires even mu <= 0");
  }
  const int mm = static_cast<int>(-r / 2);
  // 2F1(-mm, 1+mm; c; z) = sum p_k z^k; with z = 1/(1+Y), Y = e^{-2s}:
  // e^{ds} shape = (1+Y)^mm sum_k p_k (1+Y)^{-k} = sum_i Y^i sum_k p_k C(mm-k, i)
  const double a = -mm, b = 1.0 + mm, c = 0.5 * (mu + sp.d * (sp.q - sp.p));
  std::vector<double> p(mm + 1);
  p[0] = 1.0;
  for (int k = 0; k < mm; ++k) {
    p[k + 1] = p[k] * (a + k) * (b + k) / ((c + k) * (k + 1.0));
  }
  std::vector<double> coeffs(mm + 1, 0.0);
  for (int i = 0; i <= mm; ++i) {
    for (int k = 0; k <= mm; ++k) coeffs[i] += p[k] * binom(mm - k, i);
  }
  return coeffs;
}

CLambdaFit fit_C_lambda(const SpaceParams& sp, double lambda, const QuadConfig& quad) {
  require_shape_domain(sp, lambda);
  const RadialProfile prof = psi_tilde(sp, lambda);
  CLambdaFit fit;
  fit.value = radon_reduced(sp, prof, 0.0, quad).value / radon_shape_closed(sp, lambda, 0.0);

  const std::vector<double> grid = {-1.5, -0.5, 0.5, 1.5};
  fit.ratios.s_values = grid;
  double lo = fit.value, hi = fit.value;
  for (double s : grid) {
    const Integral r = radon_reduced(sp, prof, s, quad);
    const double ratio = r.value / radon_shape_closed(sp, lambda, s);
    fit.ratios.values.push_back(ratio);
    fit.ratios.error_estimates.push_back(r.error);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  fit.spread = (hi - lo) / std::fabs(fit.value);
  fit.ok = fit.value > 0.0 && fit.spread <= 1e-6;
  return fit;
}

std::vector<double> exceptional_combination(const SpaceParams& sp, double lambda,
                                            const QuadConfig& quad) {
  require_shape_domain(sp, lambda);
  const double mu = derived_mu(sp, lambda);
  const double r = std::round(mu);
  if (std::fabs(mu - r) > 1e-9 || std::lround(r) % 2 != 0 || r > 0.0) {
    throw std::invalid_argument("exceptional_combination: requires even mu <= 0");
  }
  const int mm = static_cast<int>(-r / 2);
  if (mm == 0) return {};

  std::vector<double> cfit(mm + 1);
  std::vector<std::vector<double>> A(mm + 1);
  for (int j = 0; j <= mm; ++j) {
    const CLambdaFit fit = fit_C_lambda(sp, lambda + 2.0 * j, quad);
    if (!fit.ok) throw QuadratureError("exceptional_combination: unstable C-constant fit");
    cfit[j] = fit.value;
    A[j] = shape_exponential_coeffs(sp, lambda + 2.0 * j);
  }
  // x_j = C_j * cfit[j]; kill the coefficients of e^{(lambda+2mm-2i)s} for
  // i < mm. Equation i involves j <= mm - i; solve descending in i.
  std::vector<double> x(mm + 1, 0.0);
  x[0] = cfit[0];
  for (int i = mm - 1; i >= 0; --i) {
    const int jj = mm - i;
    double acc = 0.0;
    for (int j = 0; j < jj; ++j) acc += x[j] * A[j][i];
    x[jj] = -acc / A[jj][i];
  }
  std::vector<double> out(mm);
  for (int j = 1; j <= mm; ++j) out[j - 1] = x[j] / cfit[j];
  return out;
}

namespace {

// terms co * (v-z)^e * A^{m/2-ka} * B^{delta-kb} keyed by (e, ka, kb)
using TermMap = std::map<std::tuple<int, int, int>, double>;

TermMap derivative_terms(int m, double delta, int j) {
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("s_derivative: m must be even >= 0");
  if (j < 0 || !(j < delta + 1.0 + 1e-12)) {
    throw std::invalid_argument("s_derivative: requires 0 <= j < delta + 1");
  }
  TermMap terms;
  terms[{0, 0, 0}] = 1.0;
  for (int step = 0; step < j; ++step) {
    TermMap next;
    for (const auto& [key, co] : terms) {
      const auto [e, ka, kb] = key;
      const double a = 0.5 * m - ka;
      const double b = delta - kb;
      if (e >= 1) next[{e - 1, ka, kb}] += -co * e;
      if (a != 0.0) next[{e + 1, ka + 1, kb}] += -2.0 * co * a;
      if (b != 0.0) next[{e + 1, ka, kb + 1}] += 2.0 * co * b;
    }
    terms = std::move(next);
  }
  return terms;
}

double eval_terms(const TermMap& terms, int m, double delta, double v, double u, double z) {
  const double A = (v - z) * (v - z) + u * u;
  const double B = 1.0 + 2.0 * z * v - z * z;
  double acc = 0.0;
  for (const auto& [key, co] : terms) {
    const auto [e, ka, kb] = key;
    double t = co;
    for (int i = 0; i < e; ++i) t *= (v - z);
    t *= std::pow(A, 0.5 * m - ka);
    t *= std::pow(B, delta - kb);
    acc += t;
  }
  return acc;
}

}  // namespace

double s_derivative_at_zero(int m, double delta, int j, double v, double u) {
  // B = 1 at z = 0, so only (v)^e * (v^2+u^2)^{m/2-ka} survives.
  const TermMap terms = derivative_terms(m, delta, j);
  const double A = v * v + u * u;
  double acc = 0.0;
  for (const auto& [key, co] : terms) {
    const auto [e, ka, kb] = key;
    (void)kb;
    double t = co;
    for (int i = 0; i < e; ++i) t *= v;
    const int apow = m / 2 - ka;  // never negative: the A-rule stops at 0
    for (int i = 0; i < apow; ++i) t *= A;
    acc += t;
  }
  return acc;
}

LemmaCheckResult s_derivative_lemma_check(int m, double delta, double v, double u, int j,
                                          double z) {
  const TermMap terms = derivative_terms(m, delta, j);
  LemmaCheckResult res;
  res.analytic = eval_terms(terms, m, delta, v, u, z);

  auto S = [&](double zz) {
    const double A = (v - zz) * (v - zz) + u * u;
    const double B = 1.0 + 2.0 * zz * v - zz * zz;
    return std::pow(A, 0.5 * m) * std::pow(B, delta);
  };
  const double h = 1e-2;
  auto fd = [&](double hh) -> double {
    switch (j) {
      case 0:
        return S(z);
      case 1:
        return (S(z + hh) - S(z - hh)) / (2.0 * hh);
      case 2:
        return (S(z + hh) - 2.0 * S(z) + S(z - hh)) / (hh * hh);
      case 3:
        return (S(z + 2.0 * hh) - 2.0 * S(z + hh) + 2.0 * S(z - hh) - S(z - 2.0 * hh)) /
               (2.0 * hh * hh * hh);
      case 4:
        return (S(z + 2.0 * hh) - 4.0 * S(z + hh) + 6.0 * S(z) - 4.0 * S(z - hh) +
                S(z - 2.0 * hh)) /
               (hh * hh * hh * hh);
      default:
        throw std::invalid_argument("s_derivative_lemma_check: numeric route supports j <= 4");
    }
  };
  res.numeric = j == 0 ? fd(h) : (4.0 * fd(0.5 * h) - fd(h)) / 3.0;
  return res;
}

TaylorReport taylor_report(const SpaceParams& sp, const RadialProfile& profile,
                           const QuadConfig& quad, double s_max) {
  validate_space(sp);
  if (sp.d == 8) throw std::invalid_argument("taylor_report: d=8 is classification-only");
  if (!(sp.p < sp.q)) throw std::invalid_argument("taylor_report: requires p < q");
  if (!(s_max >= 2.0)) throw std::invalid_argument("taylor_report: requires s_max >= 2");
  const DerivedConstants dc = derive_constants(sp);
  const int k0 = *dc.k0;
  const int beta = *dc.beta;
  const double delta = 0.5 * (beta - 1);
  const int m = profile.m;
  const bool compact = !std::isinf(profile.support_radius);
  if (!compact) {
    const double h_power =
        std::isnan(profile.decay.H_power) ? 0.5 * (dc.rho_q() + m) : profile.decay.H_power;
    // kernel derivative degree grows with j: v-tail needs 2 h_power > m + j + 1
    if (!(2.0 * h_power > m + k0 + 1e-9)) {
      throw std::invalid_argument("taylor_report: profile decays too slowly for k0 coefficients");
    }
    if (profile.decay.N < 3) throw std::invalid_argument("taylor_report: certificate needs N >= 3");
  }

  const bool has_x = sp.p >= 1;
  const bool has_u = sp.d >= 2;
  const double lim = compact ? std::sinh(profile.support_radius) : 0.0;

  TaylorReport rep;
  double factorial = 1.0;
  for (int j = 0; j < k0; ++j) {
    if (j > 0) factorial *= j;
    const TermMap terms = derivative_terms(m, delta, j);

    auto inner_v = [&](double x, double u, double rel, double abs) -> double {
      auto g = [&](double v) {
        double acc = 0.0;
        const double A = v * v + u * u;
        for (const auto& [key, co] : terms) {
          const auto [e, ka, kb] = key;
          (void)kb;
          double t = co;
          for (int i = 0; i < e; ++i) t *= v;
          const int apow = m / 2 - ka;
          for (int i = 0; i < apow; ++i) t *= A;
          acc += t;
        }
        return acc * profile.H(1.0 + x * x + v * v + u * u);
      };
      if (compact) {
        return integrate_adaptive<double>(g, -lim, lim, rel, abs, quad.max_subdivisions).value;
      }
      return integrate_real_line<double>(g, 1.0, quad, rel, abs).value;
    };
    auto over_x = [&](double u, double rel, double abs) -> double {
      if (!has_x) return inner_v(0.0, u, rel, abs);
      auto g = [&](double x) {
        double wx = 1.0;
        for (int i = 0; i < dc.alpha; ++i) wx *= x;
        return wx * inner_v(x, u, 0.1 * rel, 0.1 * abs);
      };
      if (compact) return integrate_adaptive<double>(g, 0.0, lim, rel, abs, quad.max_subdivisions).value;
      return integrate_half_line<double>(g, 0.0, 1.0, quad, rel, abs).value;
    };
    double cj;
    if (has_u) {
      auto g = [&](double u) {
        double wu = 1.0;
        for (int i = 0; i < sp.d - 2; ++i) wu *= u;
        return wu * over_x(u, 0.1 * quad.rel_tol, 0.1 * quad.abs_tol);
      };
      cj = compact
               ? integrate_adaptive<double>(g, 0.0, lim, quad.rel_tol, quad.abs_tol,
                                            quad.max_subdivisions)
                     .value
               : integrate_half_line<double>(g, 0.0, 1.0, quad, quad.rel_tol, quad.abs_tol).value;
    } else {
      cj = over_x(0.0, quad.rel_tol, quad.abs_tol);
    }
    rep.coefficients.push_back(cj / factorial);
  }

  for (double s = 1.0; s <= s_max + 1e-9; s += 0.5) {
    const Integral r = radon_reduced(sp, profile, s, quad);
    const double F = std::exp(sp.d * s) * r.value;
    const double z = std::exp(-s);
    double partial = 0.0;
    double zp = 1.0;
    for (int j = 0; j < k0; ++j) {
      partial += rep.coefficients[j] * zp;
      zp *= z;
    }
    // zp == z^{k0} after the loop
    rep.remainder_samples.s_values.push_back(s);
    rep.remainder_samples.values.push_back((F - partial) / zp);
    rep.remainder_samples.error_estimates.push_back(std::exp(sp.d * s) * r.error / zp);
  }
  rep.constant_term_estimate = rep.remainder_samples.values.back();
  return rep;
}

GridSeries reduction_check(const SpaceParams& sp, double lambda, const std::vector<double>& s_grid,
                           const QuadConfig& quad) {
  validate_space(sp);
  if (sp.d != 2 && sp.d != 4) {
    throw std::invalid_argument("reduction_check: requires d in {2, 4}");
  }
  if (!(sp.p < sp.q)) throw std::invalid_argument("reduction_check: requires p < q");
  SpaceParams base;
  base.d = 1;
  base.p = sp.d * (sp.p + 1) - 1;
  base.q = sp.d * (sp.q + 1) - 1;
  base.projective = true;
  const DerivedConstants dc = derive_constants(sp);
  const DerivedConstants dcb = derive_constants(base);
  if (dc.twice_rho_q != dcb.twice_rho_q) {
    throw std::logic_error("reduction_check: rho_q mismatch between the two spaces");
  }
  const RadialProfile up = psi_tilde(sp, lambda);
  const RadialProfile down = psi_tilde(base, lambda);
  const double f_up = sphere_factor(sp);
  const double f_down = sphere_factor(base);

  GridSeries out;
  out.s_values = s_grid;
  for (double s : s_grid) {
    const Integral a = radon_reduced(sp, up, s, quad);
    const Integral b = radon_reduced(base, down, s, quad);
    const double denom = std::exp(-(sp.d - 1.0) * s) * f_down * b.value;
    out.values.push_back(f_up * a.value / denom);
    out.error_estimates.push_back(
        std::fabs(f_up / denom) * a.error +
        std::fabs(f_up * a.value / (denom * b.value)) * b.error);
  }
  return out;
}

}  // namespace hyprad

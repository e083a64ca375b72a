#include "hyprad/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyprad/geometry.hpp"

namespace hyprad {

namespace {

double ipow(double base, int n) {
  double acc = 1.0;
  for (int i = 0; i < n; ++i) acc *= base;
  return acc;
}

void require_transform_support(const SpaceParams& sp) {
  validate_space(sp);
  if (sp.d == 8) throw std::invalid_argument("transforms: d=8 is classification-only");
}

// Active scalar axes of the reduced integral and the shared kernel data.
struct ReducedSetup {
  int alpha = 0;
  int beta = 0;
  int m = 0;
  int dm2 = 0;         // d - 2, the z-weight exponent
  bool has_x = false;  // p >= 1
  bool has_z = false;  // d >= 2
  bool projective = true;
  double es = 0.0;
  double ems = 0.0;
  double sinh_s = 0.0;
};

ReducedSetup reduced_setup(const SpaceParams& sp, const RadialProfile& prof, double s) {
  require_transform_support(sp);
  if (!(sp.p < sp.q)) throw std::invalid_argument("radon_reduced: requires p < q");
  if (!sp.projective && sp.d != 1) throw std::invalid_argument("radon_reduced: bad quotient");
  if (prof.m < 0) throw std::invalid_argument("radon_reduced: m must be >= 0");
  if (sp.projective && prof.m % 2 != 0) {
    throw std::invalid_argument("radon_reduced: projective quotients need even m");
  }
  const DerivedConstants dc = derive_constants(sp);
  ReducedSetup rs;
  rs.alpha = dc.alpha;
  rs.beta = *dc.beta;
  rs.m = prof.m;
  rs.dm2 = sp.d - 2;
  rs.has_x = sp.p >= 1;
  rs.has_z = sp.d >= 2;
  rs.projective = sp.projective;
  rs.es = std::exp(s);
  rs.ems = std::exp(-s);
  rs.sinh_s = std::sinh(s);

  if (std::isinf(prof.support_radius)) {
    if (prof.decay.N < 3) {
      throw std::invalid_argument("radon_reduced: certificate needs N >= 3 for noncompact support");
    }
    const double h_power = std::isnan(prof.decay.H_power)
                               ? 0.5 * (dc.rho_q() + prof.m)
                               : prof.decay.H_power;
    // tail of the kernel coordinate: integrand ~ v^(-2 h_power + m + (beta-1)/2)
    if (!(2.0 * h_power > prof.m + 0.5 * (rs.beta + 1) + 1e-12)) {
      throw std::invalid_argument("radon_reduced: certificate insufficient for convergence");
    }
  }
  return rs;
}

// kernel coordinate v(y) = -sinh s + e^s y^2 / 2 and the m-kernel; y is the
// radius of the free part of the v-block, so the weight y^beta is polynomial.
double reduced_integrand(const ReducedSetup& rs, const RadialProfile& prof, double y, double x,
                         double z) {
  const double v = -rs.sinh_s + 0.5 * rs.es * y * y;
  double kern;
  if (rs.projective) {
    const double cc = rs.ems - v;
    kern = ipow(cc * cc + z * z, rs.m / 2);
  } else {
    kern = ipow(rs.ems - v, rs.m);
  }
  double hval;
  if (!rs.projective && !rs.has_x && prof.H_signed) {
    hval = prof.H_signed(v);
  } else {
    hval = prof.H(1.0 + x * x + v * v + z * z);
  }
  double weight = ipow(y, rs.beta);
  if (rs.has_x) weight *= ipow(x, rs.alpha);
  if (rs.has_z) weight *= ipow(z, rs.dm2);
  return hval * kern * weight;
}

}  // namespace

Integral radon_reduced(const SpaceParams& sp, const RadialProfile& profile, double s,
                       const QuadConfig& quad) {
  const ReducedSetup rs = reduced_setup(sp, profile, s);
  const bool compact = !std::isinf(profile.support_radius);
  const double sinh_r = compact ? std::sinh(profile.support_radius) : 0.0;

  double y_hi = 0.0;
  if (compact) {
    const double y2 = 2.0 * rs.ems * (sinh_r + rs.sinh_s);
    if (y2 <= 0.0) return {0.0, 0.0, 0};
    y_hi = std::sqrt(y2);
  }

  const double shrink = 0.1;  // inner integrals run tighter by this per level
  const double scale_y = std::sqrt(1.0 + 2.0 * rs.ems * (1.0 + std::fabs(rs.sinh_s)));
  std::size_t evals = 0;

  auto integrate_y = [&](double x, double z, double rel, double abs) -> Integral {
    auto g = [&](double y) {
      ++evals;
      return reduced_integrand(rs, profile, y, x, z);
    };
    if (compact) return integrate_adaptive<double>(g, 0.0, y_hi, rel, abs, quad.max_subdivisions);
    return integrate_half_line<double>(g, 0.0, scale_y, quad, rel, abs);
  };

  auto integrate_x = [&](double z, double rel, double abs) -> Integral {
    if (!rs.has_x) return integrate_y(0.0, z, rel, abs);
    auto g = [&](double x) { return integrate_y(x, z, rel * shrink, abs * shrink).value; };
    if (compact) return integrate_adaptive<double>(g, 0.0, sinh_r, rel, abs, quad.max_subdivisions);
    return integrate_half_line<double>(g, 0.0, 1.0, quad, rel, abs);
  };

  Integral out;
  if (rs.has_z) {
    auto g = [&](double z) {
      return integrate_x(z, quad.rel_tol * shrink, quad.abs_tol * shrink).value;
    };
    out = compact
              ? integrate_adaptive<double>(g, 0.0, sinh_r, quad.rel_tol, quad.abs_tol,
                                           quad.max_subdivisions)
              : integrate_half_line<double>(g, 0.0, 1.0, quad, quad.rel_tol, quad.abs_tol);
  } else {
    out = integrate_x(0.0, quad.rel_tol, quad.abs_tol);
  }
  const double pref = std::exp(-(sp.d - 1) * s);
  return {pref * out.value, pref * out.error, evals};
}

double sphere_factor(const SpaceParams& sp) {
  require_transform_support(sp);
  if (!(sp.p < sp.q)) throw std::invalid_argument("sphere_factor: requires p < q");
  auto omega = [](int k) {
    return 2.0 * std::pow(M_PI, 0.5 * k) / std::tgamma(0.5 * k);
  };
  double f = omega(sp.d * (sp.q - sp.p));
  if (sp.p >= 1) f *= omega(sp.d * sp.p);
  if (sp.d >= 2) f *= omega(sp.d - 1);
  return f;
}

namespace {

double halton(long index, int base) {
  double f = 1.0, r = 0.0;
  for (long i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

template <class T>
QuadOutcome<T> radon_full_impl(const SpaceParams& sp, const std::function<T(const Point&)>& f,
                               double s, const QuadConfig& quad) {
  require_transform_support(sp);
  const DerivedConstants dc = derive_constants(sp);
  const int dims = dc.nstar_dim;
  if (dims < 1 || dims > 4) {
    throw std::invalid_argument("radon_full: requires 1 <= nstar_dim <= 4");
  }
  // w-axes sit at the tail of the free layout and shrink like e^{-s}.
  std::vector<double> scales(dims, 1.0);
  for (int i = dims - (sp.d - 1); i < dims; ++i) {
    scales[i] = std::clamp(std::exp(-s), 0.125, 8.0);
  }

  std::vector<double> xi(dims, 0.0);
  std::size_t evals = 0;
  auto eval_point = [&]() -> T {
    ++evals;
    return f(hyperboloid_point(sp, s, nstar_embed(sp, xi)));
  };

  if (quad.mc_samples > 0) {
    static const int bases[4] = {2, 3, 5, 7};
    T acc_full{};
    T acc_half{};
    const long n = quad.mc_samples;
    for (long k = 1; k <= n; ++k) {
      double jac = 1.0;
      bool ok = true;
      for (int i = 0; i < dims; ++i) {
        const double u = halton(k, bases[i]);
        const double arg = M_PI * (u - 0.5);
        const double c = std::cos(arg);
        if (c <= 1e-300) {
          ok = false;
          break;
        }
        xi[i] = scales[i] * std::tan(arg);
        jac *= scales[i] * M_PI / (c * c);
      }
      if (!ok) continue;
      const T val = eval_point() * jac;
      acc_full += val;
      if (k <= n / 2) acc_half += val;
    }
    const T mean = acc_full * (1.0 / static_cast<double>(n));
    const T mean_half = acc_half * (1.0 / static_cast<double>(std::max<long>(n / 2, 1)));
    return {mean, quad_detail::norm_of(mean - mean_half), evals};
  }

  // nested adaptive over the free axes, innermost last
  std::function<T(int, double, double)> level = [&](int i, double rel, double abs) -> T {
    auto g = [&](double c) -> T {
      xi[i] = c;
      if (i + 1 == dims) return eval_point();
      return level(i + 1, rel * 0.1, abs * 0.1);
    };
    QuadOutcome<T> r = integrate_real_line<T>(g, scales[i], quad, rel, abs);
    return r.value;
  };

  auto g0 = [&](double c) -> T {
    xi[0] = c;
    if (dims == 1) return eval_point();
    return level(1, quad.rel_tol * 0.1, quad.abs_tol * 0.1);
  };
  QuadOutcome<T> out = integrate_real_line<T>(g0, scales[0], quad, quad.rel_tol, quad.abs_tol);
  out.evaluations = evals;
  return out;
}

}  // namespace

Integral radon_full(const SpaceParams& sp, const std::function<double(const Point&)>& f, double s,
                    const QuadConfig& quad) {
  return radon_full_impl<double>(sp, f, s, quad);
}

IntegralC radon_full_complex(const SpaceParams& sp,
                             const std::function<std::complex<double>(const Point&)>& f, double s,
                             const QuadConfig& quad) {
  return radon_full_impl<std::complex<double>>(sp, f, s, quad);
}

double abel(const SpaceParams& sp, double radon_value, double s) {
  const DerivedConstants dc = derive_constants(sp);
  return std::exp(dc.rho_1() * s) * radon_value;
}

GridSeries abel_series(const SpaceParams& sp, const GridSeries& radon_values) {
  const DerivedConstants dc = derive_constants(sp);
  GridSeries out = radon_values;
  for (std::size_t i = 0; i < out.s_values.size(); ++i) {
    const double g = std::exp(dc.rho_1() * out.s_values[i]);
    out.values[i] *= g;
    if (!out.error_estimates.empty()) out.error_estimates[i] *= g;
  }
  return out;
}

double radial_laplacian(const SpaceParams& sp, const std::function<double(double)>& phi, double t,
                        double h_step) {
  require_transform_support(sp);
  if (!(h_step > 0.0 && h_step <= 0.05)) {
    throw std::invalid_argument("radial_laplacian: h_step must lie in (0, 0.05]");
  }
  const double b = sp.d * sp.p + sp.d - 1;
  const double c = sp.d * sp.q + sp.d - 1;
  t = std::fabs(t);  // radial profiles are even

  if (t < 0.15) {
    // even quartic-in-t^2 fit from samples at 0, h3, 2h3, 3h3; stable through
    // the coth pole because only phi'(t)/t and t*coth(t) appear.
    const double h3 = std::max(h_step, t / 1.5);
    const double tau1 = h3 * h3, tau2 = 4.0 * tau1, tau3 = 9.0 * tau1;
    const double f0 = phi(0.0);
    double rhs[3] = {phi(h3) - f0, phi(2.0 * h3) - f0, phi(3.0 * h3) - f0};
    double M[3][3] = {{tau1, tau1 * tau1, tau1 * tau1 * tau1},
                      {tau2, tau2 * tau2, tau2 * tau2 * tau2},
                      {tau3, tau3 * tau3, tau3 * tau3 * tau3}};
    // Gaussian elimination, 3x3
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r2 = col + 1; r2 < 3; ++r2) {
        if (std::fabs(M[r2][col]) > std::fabs(M[piv][col])) piv = r2;
      }
      std::swap(M[col], M[piv]);
      std::swap(rhs[col], rhs[piv]);
      for (int r2 = col + 1; r2 < 3; ++r2) {
        const double fac = M[r2][col] / M[col][col];
        for (int cc = col; cc < 3; ++cc) M[r2][cc] -= fac * M[col][cc];
        rhs[r2] -= fac * rhs[col];
      }
    }
    double a[3];
    for (int row = 2; row >= 0; --row) {
      double acc = rhs[row];
      for (int cc = row + 1; cc < 3; ++cc) acc -= M[row][cc] * a[cc];
      a[row] = acc / M[row][row];
    }
    const double t2 = t * t;
    const double d2 = 2.0 * a[0] + 12.0 * a[1] * t2 + 30.0 * a[2] * t2 * t2;
    const double d1_over_t = 2.0 * a[0] + 4.0 * a[1] * t2 + 6.0 * a[2] * t2 * t2;
    double t_coth;  // t * coth(t), smooth through 0
    if (t < 0.25) {
      t_coth = 1.0 + t2 / 3.0 - t2 * t2 / 45.0 + 2.0 * t2 * t2 * t2 / 945.0;
    } else {
      t_coth = t / std::tanh(t);
    }
    return d2 + b * t_coth * d1_over_t + c * std::tanh(t) * t * d1_over_t;
  }

  auto d2_at = [&](double h) { return (phi(t + h) - 2.0 * phi(t) + phi(t - h)) / (h * h); };
  auto d1_at = [&](double h) { return (phi(t + h) - phi(t - h)) / (2.0 * h); };
  const double d2 = (4.0 * d2_at(0.5 * h_step) - d2_at(h_step)) / 3.0;
  const double d1 = (4.0 * d1_at(0.5 * h_step) - d1_at(h_step)) / 3.0;
  return d2 + (b / std::tanh(t) + c * std::tanh(t)) * d1;
}

GridSeries apply_D_downstairs(const SpaceParams& sp, const GridSeries& abel_values) {
  require_transform_support(sp);
  const std::vector<double>& sv = abel_values.s_values;
  const std::size_t n = sv.size();
  if (n < 2) throw std::invalid_argument("apply_D_downstairs: grid too short");
  const double h = sv[1] - sv[0];
  if (!(h > 0.0 && h <= 0.04 + 1e-12)) {
    throw std::invalid_argument("apply_D_downstairs: grid step must lie in (0, 0.04]");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (std::fabs(sv[i] - sv[i - 1] - h) > 1e-9 * std::max(1.0, h)) {
      throw std::invalid_argument("apply_D_downstairs: grid must be uniform");
    }
  }
  std::vector<double> lambdas = noncuspidal_parameters(sp);
  const std::size_t factors = lambdas.size() + 1;
  if (n < 4 * factors + 5) {
    throw std::invalid_argument("apply_D_downstairs: grid too short for the stencil");
  }

  // discrete eigenvalue of the five-point second-difference stencil on
  // e^{lambda s}; equals lambda^2 + O(h^4) and is 0 exactly at lambda = 0.
  auto stencil_eig = [h](double lambda) {
    return (-2.0 * std::cosh(2.0 * lambda * h) + 32.0 * std::cosh(lambda * h) - 30.0) /
           (12.0 * h * h);
  };

  std::vector<double> shifts;
  shifts.push_back(0.0);
  for (double l : lambdas) shifts.push_back(stencil_eig(l));

  std::vector<double> cur = abel_values.values;
  std::vector<double> err = abel_values.error_estimates;
  if (err.empty()) err.assign(n, 0.0);
  std::vector<double> s_cur = sv;

  for (double shift : shifts) {
    const std::size_t len = cur.size();
    std::vector<double> next(len - 4);
    std::vector<double> nerr(len - 4);
    const double inv = 1.0 / (12.0 * h * h);
    const double amp = 60.0 * inv + std::fabs(shift);
    for (std::size_t i = 2; i + 2 < len; ++i) {
      next[i - 2] = (-cur[i - 2] + 16.0 * cur[i - 1] - 30.0 * cur[i] + 16.0 * cur[i + 1] -
                     cur[i + 2]) *
                        inv -
                    shift * cur[i];
      double e = 0.0;
      for (std::size_t k = i - 2; k <= i + 2; ++k) e = std::max(e, err[k]);
      nerr[i - 2] = amp * e;
    }
    cur = std::move(next);
    err = std::move(nerr);
    s_cur = std::vector<double>(s_cur.begin() + 2, s_cur.end() - 2);
  }
  return {s_cur, cur, err};
}

GridSeries radon_grid(const SpaceParams& sp, const RadialProfile& profile,
                      const std::vector<double>& s_values, int panels, int order) {
  if (std::isinf(profile.support_radius)) {
    throw std::invalid_argument("radon_grid: requires a compactly supported profile");
  }
  if (panels < 1 || order < 2) throw std::invalid_argument("radon_grid: bad rule size");
  std::vector<double> gx, gw;
  gauss_legendre(order, gx, gw);

  GridSeries out;
  out.s_values = s_values;
  out.values.assign(s_values.size(), 0.0);
  out.error_estimates.assign(s_values.size(), 0.0);

  const double sinh_r = std::sinh(profile.support_radius);
  for (std::size_t is = 0; is < s_values.size(); ++is) {
    const double s = s_values[is];
    const ReducedSetup rs = reduced_setup(sp, profile, s);
    const double y2 = 2.0 * rs.ems * (sinh_r + rs.sinh_s);
    if (y2 <= 0.0) continue;
    const double y_hi = std::sqrt(y2);
    // the kernel coordinate leaves the support of H below this radius, for
    // every (x, z); panelling only the band keeps the rule accurate (and its
    // error smooth in s) when the band is thin at large |s|.
    const double y_lo = std::sqrt(std::max(0.0, 2.0 * rs.ems * (rs.sinh_s - sinh_r)));

    auto panel_sum = [&](double lo, double hi, auto&& g) {
      const double w_panel = (hi - lo) / panels;
      double acc = 0.0;
      for (int pnl = 0; pnl < panels; ++pnl) {
        const double a = lo + pnl * w_panel;
        for (int k = 0; k < order; ++k) {
          const double u = a + 0.5 * w_panel * (gx[k] + 1.0);
          acc += 0.5 * w_panel * gw[k] * g(u);
        }
      }
      return acc;
    };

    double val;
    if (rs.has_z && rs.has_x) {
      val = panel_sum(0.0, sinh_r, [&](double z) {
        return panel_sum(0.0, sinh_r, [&](double x) {
          return panel_sum(y_lo, y_hi,
                           [&](double y) { return reduced_integrand(rs, profile, y, x, z); });
        });
      });
    } else if (rs.has_z) {
      val = panel_sum(0.0, sinh_r, [&](double z) {
        return panel_sum(y_lo, y_hi,
                         [&](double y) { return reduced_integrand(rs, profile, y, 0.0, z); });
      });
    } else if (rs.has_x) {
      val = panel_sum(0.0, sinh_r, [&](double x) {
        return panel_sum(y_lo, y_hi,
                         [&](double y) { return reduced_integrand(rs, profile, y, x, 0.0); });
      });
    } else {
      val = panel_sum(y_lo, y_hi,
                      [&](double y) { return reduced_integrand(rs, profile, y, 0.0, 0.0); });
    }
    out.values[is] = std::exp(-(sp.d - 1) * s) * val;
  }
  return out;
}

}  // namespace hyprad

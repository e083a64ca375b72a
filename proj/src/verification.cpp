#include "hyprad/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "hyprad/geometry.hpp"
#include "hyprad/model_functions.hpp"
#include "hyprad/reference.hpp"
#include "hyprad/specfun.hpp"
#include "hyprad/transforms.hpp"

namespace hyprad {

namespace {

// splitmix64: deterministic across platforms, unlike <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform(double lo, double hi) {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return lo + (hi - lo) * ((z >> 11) * 0x1.0p-53);
  }

 private:
  std::uint64_t state_;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

// ---------------------------------------------------------------- criterion 1
CheckResult criterion_kernel_integral() {
  CheckResult res{1, "closed-form kernel integral vs quadrature", false, 0.0, 1e-8, 0.0, ""};
  Rng rng(0x5eed2026a11ce001ULL);
  QuadConfig quad;
  quad.rel_tol = 1e-11;
  quad.abs_tol = 1e-14;
  double worst = 0.0;
  for (int i = 0; i < 400; ++i) {
    const double mu = rng.uniform(0.2, 3.0);
    const double nu = rng.uniform(0.5 * mu + 0.2, 4.0);
    const double s = rng.uniform(-2.0, 2.0);
    const double closed = gr_integral_closed(mu, nu, s);
    const Integral num = gr_integral_numeric(mu, nu, s, quad);
    worst = std::max(worst, std::fabs(closed - num.value) / std::fabs(closed));
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = fmt("max relative mismatch %.3e over 400 random (mu, nu, s)", worst);
  return res;
}

// ---------------------------------------------------------------- criterion 2
CheckResult criterion_geometry_roundtrip() {
  CheckResult res{2, "chart and polar round-trips", false, 0.0, 1e-10, 0.0, ""};
  const std::vector<SpaceParams> charts = {
      {1, 0, 2, true},  {1, 0, 4, false}, {2, 0, 4, true}, {1, 2, 1, true},
      {2, 1, 1, true},  {4, 0, 1, true},  {1, 1, 1, true}, {1, 3, 2, false},
  };
  Rng rng(0x5eed2026a11ce002ULL);
  double worst = 0.0;
  for (const SpaceParams& sp : charts) {
    const DerivedConstants dc = derive_constants(sp);
    for (int trial = 0; trial < 1000; ++trial) {
      const double s = rng.uniform(-1.5, 1.5);
      std::vector<double> free_coords(dc.nstar_dim);
      for (double& c : free_coords) c = rng.uniform(-2.0, 2.0);
      const NStarCoords n = nstar_embed(sp, free_coords);
      const Point x = hyperboloid_point(sp, s, n);

      worst = std::max(worst, std::fabs(x.form() + 1.0));

      auto norm = [](const std::vector<double>& v) {
        double acc = 0.0;
        for (double c : v) acc += c * c;
        return std::sqrt(acc);
      };
      const double xr = sp.p < sp.q ? norm(n.u) : norm(n.v);
      const double yr = sp.p < sp.q ? norm(n.v) : norm(n.u);
      const double zr = std::exp(s) * norm(n.w);
      const ReducedCoords rc = reduced_coords(sp, s, xr, yr, zr);
      const PolarPoint pp = polar_coords(x);

      const double ch = std::cosh(pp.t);
      worst = std::max(worst, std::fabs(ch * ch - rc.cosh2_t) / rc.cosh2_t);
      if (sp.projective) {
        const double lhs = std::fabs(std::cos(pp.theta)) * ch;
        const double rhs = std::sqrt(rc.cos2theta_cosh2t);
        worst = std::max(worst, std::fabs(lhs - rhs) / ch);
      } else {
        const double lhs = std::cos(pp.theta) * ch;
        worst = std::max(worst, std::fabs(lhs - rc.cos_theta_cosh_t) / ch);
        if (sp.p == 0) {
          // signed radial coordinate: the single positive coordinate is -v
          worst = std::max(worst, std::fabs(x.coords[0] - rc.sinh_t) / (1.0 + std::fabs(rc.sinh_t)));
        }
      }
    }
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = fmt("max defect %.3e over 8 charts x 1000 points", worst);
  return res;
}

// ---------------------------------------------------------------- criterion 3
CheckResult criterion_spherical_abel() {
  CheckResult res{3, "spherical Radon ratios and Abel exponents", false, 0.0, 1e-4, 0.0, ""};
  const std::vector<SpaceParams> spaces = {{1, 0, 4, true}, {1, 0, 6, true}, {2, 0, 4, true}};
  QuadConfig quad;
  double worst_spread = 0.0;
  double worst_exp = 0.0;
  for (const SpaceParams& sp : spaces) {
    const double lam_top = 0.5 * (sp.d * sp.q - sp.d * sp.p) - 1.0;
    for (const SeriesParam& series : enumerate_series(sp, lam_top + 0.1)) {
      if (!series.spherical) continue;
      const double lambda = series.lambda();

      const RadialProfile prof = psi_tilde(sp, lambda);
      const std::vector<double> grid = {-1.5, -0.5, 0.0, 0.5, 1.5};
      double lo = 0.0, hi = 0.0;
      bool first = true;
      for (double s : grid) {
        const double ratio =
            radon_reduced(sp, prof, s, quad).value / radon_shape_closed(sp, lambda, s);
        lo = first ? ratio : std::min(lo, ratio);
        hi = first ? ratio : std::max(hi, ratio);
        first = false;
      }
      worst_spread = std::max(worst_spread, (hi - lo) / std::fabs(0.5 * (hi + lo)));

      RadialProfile fit_prof = prof;
      if (series.mu < 0) {
        fit_prof = psi_combination(sp, lambda, exceptional_combination(sp, lambda, quad));
      }
      std::vector<double> xs, ys;
      for (double s = 0.5; s <= 2.5 + 1e-9; s += 0.25) {
        const double val = abel(sp, radon_reduced(sp, fit_prof, s, quad).value, s);
        xs.push_back(s);
        ys.push_back(std::log(std::fabs(val)));
      }
      worst_exp = std::max(worst_exp, std::fabs(fit_slope(xs, ys) - lambda));
    }
  }
  res.measured = worst_exp;
  res.pass = worst_spread <= 1e-5 && worst_exp <= 1e-4;
  res.detail = fmt("max ratio spread %.3e (tol 1e-5); max |fitted exponent - lambda| %.3e",
                   worst_spread, worst_exp);
  return res;
}

// ---------------------------------------------------------------- criterion 4
CheckResult criterion_full_vs_reduced() {
  CheckResult res{4, "full vs sphere-normalized reduced transform", false, 0.0, 1e-5, 0.0, ""};
  QuadConfig quad;
  quad.rel_tol = 1e-7;  // nested full-chart integral; threshold is 1e-5
  quad.abs_tol = 1e-10;
  struct Case {
    SpaceParams sp;
    RadialProfile prof;
    const char* tag;
  };
  std::vector<Case> cases;
  cases.push_back({{1, 0, 2, true}, psi_tilde({1, 0, 2, true}, 2.0), "(1,0,2) psi~_2"});
  cases.push_back({{2, 0, 1, true}, psi_tilde({2, 0, 1, true}, 2.0), "(2,0,1) psi~_2"});
  cases.push_back({{1, 0, 2, true}, bump_profile(1.0, 2), "(1,0,2) bump m=2"});

  double worst = 0.0;
  for (const Case& c : cases) {
    const auto mode = mode_function(c.prof);
    auto f = [&](const Point& x) {
      const PolarPoint pp = polar_coords(x);
      return mode(pp.theta, pp.t);
    };
    const double factor = sphere_factor(c.sp);
    for (double s : {-0.5, 0.0, 0.7}) {
      const double full = radon_full(c.sp, f, s, quad).value;
      const double red = factor * radon_reduced(c.sp, c.prof, s, quad).value;
      const double denom = std::max({std::fabs(red), std::fabs(full), 1e-12});
      worst = std::max(worst, std::fabs(full - red) / denom);
    }
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = fmt("max relative mismatch %.3e over 3 cases x 3 offsets", worst);
  return res;
}

// ---------------------------------------------------------------- criterion 5
CheckResult criterion_support_vanishing() {
  CheckResult res{5, "support vanishing beyond the bump radius (p >= q)", false, 0.0, 0.0, 0.0, ""};
  QuadConfig quad;
  const RadialProfile prof = bump_profile(1.0, 0);
  const auto mode = mode_function(prof);
  double worst = 0.0;
  double interior_min = 1e300;
  for (const SpaceParams sp : {SpaceParams{1, 2, 1, true}, SpaceParams{2, 1, 1, true}}) {
    auto f = [&](const Point& x) {
      const PolarPoint pp = polar_coords(x);
      return mode(pp.theta, pp.t);
    };
    for (double a : {1.1, 1.5, 2.0}) {
      for (double s : {a, -a}) {
        worst = std::max(worst, std::fabs(radon_full(sp, f, s, quad).value));
      }
    }
    interior_min = std::min(interior_min, std::fabs(radon_full(sp, f, 0.25, quad).value));
  }
  res.measured = worst;
  res.pass = worst == 0.0 && interior_min > 1e-6;
  res.detail = fmt("max |Rf| outside support %.3e (must be exactly 0); interior |Rf| >= %.3e",
                   worst, interior_min);
  return res;
}

// ---------------------------------------------------------------- criterion 6
CheckResult criterion_cuspidal_qd1() {
  CheckResult res{6, "cuspidality on the q=d=1 branch", false, 0.0, 1e-6, 0.0, ""};
  const SpaceParams sp{1, 1, 1, true};
  QuadConfig quad;
  double worst = 0.0;
  for (const SeriesParam& series : enumerate_series(sp, 1.0)) {
    const auto psi = psi_qd1_point(sp, series);
    auto f_abs = [&](const Point& x) { return std::abs(psi(x)); };
    for (double s : {-1.0, 0.0, 1.0}) {
      const IntegralC r = radon_full_complex(sp, psi, s, quad);
      const double scale = radon_full(sp, f_abs, s, quad).value;
      worst = std::max(worst, std::abs(r.value) / scale);
    }
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = fmt("max |R psi| / R |psi| = %.3e for lambda = +-1", worst);
  return res;
}

// ---------------------------------------------------------------- criterion 7
CheckResult criterion_intertwining() {
  CheckResult res{7, "Laplacian intertwining through the Abel transform", false, 0.0, 1e-4, 0.0,
                  ""};
  const SpaceParams sp{1, 0, 4, true};
  const DerivedConstants dc = derive_constants(sp);
  const double rho2 = dc.rho_q() * dc.rho_q();
  // Smooth-profile integrals can go tight; the Laplacian profile is built
  // from difference stencils, so its integrator must stop above that noise.
  QuadConfig quad;
  quad.rel_tol = 1e-9;
  quad.abs_tol = 1e-12;
  QuadConfig quad_stencil;
  quad_stencil.rel_tol = 3e-8;
  quad_stencil.abs_tol = 1e-10;
  quad_stencil.max_subdivisions = 8000;

  const RadialProfile f = bump_profile(1.0, 0);
  auto phi = [&](double t) { return f.H(std::cosh(t) * std::cosh(t)); };
  RadialProfile lap;
  lap.m = 0;
  lap.support_radius = 1.05;
  lap.H = [&](double w) {
    const double t = std::asinh(std::sqrt(std::max(w - 1.0, 0.0)));
    return radial_laplacian(sp, phi, t);
  };

  const double h = 0.02;
  auto abel_f = [&](double s) { return abel(sp, radon_reduced(sp, f, s, quad).value, s); };

  double worst = 0.0;
  double scale = 0.0;
  std::vector<double> lhs_all, rhs_all;
  for (double s = -1.5; s <= 1.5 + 1e-9; s += 0.1) {
    const double lhs = abel(sp, radon_reduced(sp, lap, s, quad_stencil).value, s);
    const double a0 = abel_f(s);
    const double d2 = (-abel_f(s + 2.0 * h) + 16.0 * abel_f(s + h) - 30.0 * a0 +
                       16.0 * abel_f(s - h) - abel_f(s - 2.0 * h)) /
                      (12.0 * h * h);
    const double rhs = d2 - rho2 * a0;
    lhs_all.push_back(lhs);
    rhs_all.push_back(rhs);
    scale = std::max(scale, std::fabs(lhs));
  }
  for (std::size_t i = 0; i < lhs_all.size(); ++i) {
    worst = std::max(worst, std::fabs(lhs_all[i] - rhs_all[i]));
  }
  res.measured = worst / scale;
  res.pass = res.measured <= res.threshold;
  res.detail = fmt("max |A(Lap f) - (d^2/ds^2 - rho^2) A f| = %.3e of scale %.3e", worst, scale);
  return res;
}

// ---------------------------------------------------------------- criterion 8
CheckResult criterion_eigenfunction() {
  CheckResult res{8, "radial eigenfunction gate", false, 0.0, 1e-6, 0.0, ""};
  struct Case {
    SpaceParams sp;
    double lambda;
  };
  double worst = 0.0;
  for (const Case& c : {Case{{1, 0, 4, true}, 1.0}, Case{{2, 0, 4, true}, 3.0}}) {
    const DerivedConstants dc = derive_constants(c.sp);
    const double eig = c.lambda * c.lambda - dc.rho_q() * dc.rho_q();
    const RadialProfile prof = psi_tilde(c.sp, c.lambda);
    auto phi = [&](double t) { return prof.H(std::cosh(t) * std::cosh(t)); };
    for (double t : {0.4, 0.9, 1.5}) {
      const double got = radial_laplacian(c.sp, phi, t) / phi(t);
      worst = std::max(worst, std::fabs(got - eig) / std::fabs(eig));
    }
  }
  res.measured = worst;
  res.pass = worst <= res.threshold;
  res.detail = fmt("max relative eigenvalue defect %.3e", worst);
  return res;
}

// ---------------------------------------------------------------- criterion 9
CheckResult criterion_taylor_decay() {
  CheckResult res{9, "Taylor coefficients and downstairs-operator decay", false, 0.0, 0.1, 0.0,
                  ""};
  QuadConfig quad;
  double worst_odd = 0.0;
  double worst_ratio = 0.0;
  bool exponents_ok = true;

  for (const SpaceParams sp : {SpaceParams{1, 0, 4, true}, SpaceParams{2, 0, 4, true}}) {
    const DerivedConstants dc = derive_constants(sp);
    // positive expansion exponents, doubled, vs the non-cuspidal list (exact)
    std::set<int> exps;
    for (int j = 0;; ++j) {
      const int twice = dc.twice_rho_1 - 2 * sp.d - 4 * j;
      if (twice <= 0) break;
      exps.insert(twice);
    }
    std::set<int> noncusp;
    for (int t : noncuspidal_parameters_twice(sp)) noncusp.insert(t);
    if (exps != noncusp) exponents_ok = false;

    for (int m : {0, 2}) {
      const RadialProfile prof = bump_profile(2.5, m);
      const TaylorReport rep = taylor_report(sp, prof, quad, 4.0);
      for (std::size_t j = 1; j < rep.coefficients.size(); j += 2) {
        worst_odd = std::max(worst_odd,
                             std::fabs(rep.coefficients[j]) / std::fabs(rep.coefficients[0]));
      }

      // step 0.04: the stencil chain multiplies pointwise roundoff by
      // (64 / 12h^2)^factors, so the coarser admissible grid keeps that gain
      // below the far-field signal the criterion measures.
      std::vector<double> grid;
      for (int i = 0; i <= 120; ++i) grid.push_back(0.6 + 0.04 * i);
      const GridSeries rg = radon_grid(sp, prof, grid, 24, 16);
      const GridSeries ab = abel_series(sp, rg);
      const GridSeries dg = apply_D_downstairs(sp, ab);
      double far = 0.0, near = 0.0;
      for (std::size_t i = 0; i < dg.s_values.size(); ++i) {
        const double s = dg.s_values[i];
        const double a = std::fabs(dg.values[i]);
        if (s >= 3.0 - 1e-9 && s <= 5.0 + 1e-9) far = std::max(far, a);
        if (s >= 1.0 - 1e-9 && s <= 2.0 + 1e-9) near = std::max(near, a);
      }
      worst_ratio = std::max(worst_ratio, far / near);
    }
  }
  res.measured = worst_ratio;
  res.pass = exponents_ok && worst_odd <= 1e-8 && worst_ratio <= 0.1;
  res.detail = fmt("decay ratio far/near %.3e (tol 0.1); odd/|c0| %.3e (tol 1e-8)", worst_ratio,
                   worst_odd) +
               (exponents_ok ? "; exponent sets match exactly" : "; EXPONENT SET MISMATCH");
  return res;
}

// --------------------------------------------------------------- criterion 10
CheckResult criterion_reduction() {
  CheckResult res{10, "rank-one reduction identity", false, 0.0, 1e-5, 0.0, ""};
  QuadConfig quad;
  const GridSeries ratios =
      reduction_check({2, 0, 1, true}, 2.0, {-1.0, -0.5, 0.0, 0.5, 1.0}, quad);
  double lo = ratios.values[0], hi = ratios.values[0], mean = 0.0;
  for (double v : ratios.values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    mean += v;
  }
  mean /= ratios.values.size();
  res.measured = (hi - lo) / std::fabs(mean);
  res.pass = res.measured <= res.threshold;
  res.detail = fmt("ratio spread %.3e over 5 offsets; mean ratio %.12f", res.measured, mean);
  return res;
}

}  // namespace

CheckResult run_criterion(int id) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  CheckResult res;
  switch (id) {
    case 1: res = criterion_kernel_integral(); break;
    case 2: res = criterion_geometry_roundtrip(); break;
    case 3: res = criterion_spherical_abel(); break;
    case 4: res = criterion_full_vs_reduced(); break;
    case 5: res = criterion_support_vanishing(); break;
    case 6: res = criterion_cuspidal_qd1(); break;
    case 7: res = criterion_intertwining(); break;
    case 8: res = criterion_eigenfunction(); break;
    case 9: res = criterion_taylor_decay(); break;
    case 10: res = criterion_reduction(); break;
    default: throw std::invalid_argument("run_criterion: id must be 1..10");
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "specfun") return {1};
  if (suite == "geometry") return {2};
  if (suite == "transforms") return {3, 4, 5, 6, 7, 8};
  if (suite == "reference") return {9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw std::invalid_argument("unknown verification suite: " + suite);
}

std::vector<CheckResult> run_suite(const std::string& suite) {
  std::vector<CheckResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
  return out;
}

}  // namespace hyprad

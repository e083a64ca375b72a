#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyprad {

struct QuadratureError : std::runtime_error {
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

// Shared configuration for all numerical integration entry points.
// truncation selects how half-infinite axes are compactified.
struct QuadConfig {
  enum class Truncation { tangent_map, exponential_map };

  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;  // interval splits allowed per axis
  Truncation truncation = Truncation::tangent_map;
  long mc_samples = 0;  // >0: full-dimensional transforms use quasi-Monte Carlo
};

template <class T>
struct QuadOutcome {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

using Integral = QuadOutcome<double>;
using IntegralC = QuadOutcome<std::complex<double>>;

namespace quad_detail {

inline double norm_of(double v) { return std::fabs(v); }
inline double norm_of(const std::complex<double>& v) { return std::abs(v); }

// Gauss–Kronrod 15(7) abscissae/weights on [-1,1]; odd-index abscissae carry
// the embedded 7-point Gauss rule.
inline constexpr double kGK15X[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double kGK15WK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double kGK15WG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class T, class F>
QuadOutcome<T> gk15(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  T fc = f(mid);
  T kron = kGK15WK[7] * fc;
  T gauss = kGK15WG[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kGK15X[i];
    T lo = f(mid - dx);
    T hi = f(mid + dx);
    T pair = lo + hi;
    kron += kGK15WK[i] * pair;
    if (i % 2 == 1) gauss += kGK15WG[i / 2] * pair;
  }
  kron *= half;
  gauss *= half;
  return {kron, norm_of(kron - gauss), 15};
}

template <class T, class F>
class AdaptiveAxis {
 public:
  AdaptiveAxis(F& f, double rel_tol, double abs_tol, int max_subdivisions)
      : f_(f), rel_tol_(rel_tol), abs_tol_(abs_tol), max_subdivisions_(max_subdivisions) {}

  QuadOutcome<T> run(double a, double b) {
    QuadOutcome<T> whole = gk15<T>(f_, a, b);
    evals_ = whole.evaluations;
    const double scale = norm_of(whole.value);
    const double tol = std::max(abs_tol_, rel_tol_ * scale);
    QuadOutcome<T> out = refine(a, b, whole, tol, 0);
    out.evaluations = evals_;
    return out;
  }

 private:
  QuadOutcome<T> refine(double a, double b, const QuadOutcome<T>& est, double tol, int depth) {
    if (est.error <= tol || depth >= 52) return est;
    if (++splits_ > max_subdivisions_) {
      throw QuadratureError("adaptive quadrature: subdivision budget exhausted");
    }
    const double mid = 0.5 * (a + b);
    QuadOutcome<T> left = gk15<T>(f_, a, mid);
    QuadOutcome<T> right = gk15<T>(f_, mid, b);
    evals_ += left.evaluations + right.evaluations;
    QuadOutcome<T> lr = refine(a, mid, left, 0.5 * tol, depth + 1);
    QuadOutcome<T> rr = refine(mid, b, right, 0.5 * tol, depth + 1);
    return {lr.value + rr.value, lr.error + rr.error, 0};
  }

  F& f_;
  double rel_tol_;
  double abs_tol_;
  int max_subdivisions_;
  int splits_ = 0;
  std::size_t evals_ = 0;
};

}  // namespace quad_detail

// Adaptive Gauss–Kronrod 15(7) by recursive bisection on [a,b]. Deterministic:
// fixed split order, fixed summation order, error budget halved per split.
template <class T, class F>
QuadOutcome<T> integrate_adaptive(F&& f, double a, double b, double rel_tol, double abs_tol,
                                  int max_subdivisions = 2000) {
  quad_detail::AdaptiveAxis<T, F> axis(f, rel_tol, abs_tol, max_subdivisions);
  return axis.run(a, b);
}

// [lo, +inf): tangent map x = lo + scale*tan(pi u / 2) or exponential map
// x = lo - scale*log1p(-u), u in [0,1). The integrand must vanish (or
// underflow) at the far end; GK nodes never touch u = 1.
template <class T, class F>
QuadOutcome<T> integrate_half_line(F&& f, double lo, double scale, const QuadConfig& cfg,
                                   double rel_tol, double abs_tol) {
  const double s = std::max(scale, 1e-8);
  if (cfg.truncation == QuadConfig::Truncation::tangent_map) {
    auto g = [&f, lo, s](double u) -> T {
      const double c = std::cos(0.5 * M_PI * u);
      if (c <= 0.0) return T{};
      const double x = lo + s * std::tan(0.5 * M_PI * u);
      const double jac = s * 0.5 * M_PI / (c * c);
      if (!std::isfinite(x) || !std::isfinite(jac)) return T{};
      return f(x) * jac;
    };
    return integrate_adaptive<T>(g, 0.0, 1.0, rel_tol, abs_tol, cfg.max_subdivisions);
  }
  auto g = [&f, lo, s](double u) -> T {
    const double one_minus = 1.0 - u;
    if (one_minus <= 0.0) return T{};
    const double x = lo - s * std::log(one_minus);
    const double jac = s / one_minus;
    if (!std::isfinite(x) || !std::isfinite(jac)) return T{};
    return f(x) * jac;
  };
  return integrate_adaptive<T>(g, 0.0, 1.0, rel_tol, abs_tol, cfg.max_subdivisions);
}

// (-inf, +inf): symmetric tangent map x = scale*tan(pi(u - 1/2)).
template <class T, class F>
QuadOutcome<T> integrate_real_line(F&& f, double scale, const QuadConfig& cfg, double rel_tol,
                                   double abs_tol) {
  const double s = std::max(scale, 1e-8);
  auto g = [&f, s](double u) -> T {
    const double arg = M_PI * (u - 0.5);
    const double c = std::cos(arg);
    if (c <= 0.0) return T{};
    const double x = s * std::tan(arg);
    const double jac = s * M_PI / (c * c);
    if (!std::isfinite(x) || !std::isfinite(jac)) return T{};
    return f(x) * jac;
  };
  return integrate_adaptive<T>(g, 0.0, 1.0, rel_tol, abs_tol, cfg.max_subdivisions);
}

// tanh-sinh (double-exponential) rule on (a,b); handles integrable endpoint
// singularities. Levels halve the step until successive estimates agree.
template <class F>
Integral integrate_tanh_sinh(F&& f, double a, double b, double rel_tol, double abs_tol,
                             int max_level = 12) {
  const double r = 0.5 * (b - a);
  const double t_max = 6.5;  // weights underflow well before this
  std::size_t evals = 0;

  auto node_sum = [&](double h, bool odd_only) -> double {
    // odd_only sums the nodes new to this level (odd multiples of h); node
    // data depends only on t = k*h, so prior levels' contributions carry over.
    double acc = 0.0;
    const int k0 = odd_only ? 1 : 0;
    const int dk = odd_only ? 2 : 1;
    for (int k = k0;; k += dk) {
      const double t = k * h;
      if (t > t_max) break;
      const double sh = 0.5 * M_PI * std::sinh(t);
      const double ch = std::cosh(sh);
      const double w = 0.5 * M_PI * std::cosh(t) / (ch * ch);
      if (w < 1e-300) break;
      // r*(1 - tanh(sh)) without cancellation: singular integrands need the
      // distance to the near endpoint accurate, not the absolute abscissa.
      const double em = std::exp(-2.0 * sh);
      const double dist = r * (2.0 * em / (1.0 + em));
      if (dist <= 0.0) break;
      double term = 0.0;
      const double xp = b - dist;
      const double xm = a + dist;
      if (xp > a && xp < b) {
        term += f(xp);
        ++evals;
      }
      if (k > 0 && xm > a && xm < b) {
        term += f(xm);
        ++evals;
      }
      acc += w * term;
    }
    return acc;
  };

  double h = 1.0;
  double sum = node_sum(h, false);
  double prev = r * h * sum;
  double est = prev;
  double err = std::fabs(prev);
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    sum += node_sum(h, true);
    est = r * h * sum;
    err = std::fabs(est - prev);
    if (level >= 3 && err <= std::max(abs_tol, rel_tol * std::fabs(est))) {
      return {est, err, evals};
    }
    prev = est;
  }
  if (err > 1e3 * std::max(abs_tol, rel_tol * std::fabs(est))) {
    throw QuadratureError("tanh-sinh quadrature failed to converge");
  }
  return {est, err, evals};
}

// Gauss–Legendre nodes/weights on [-1,1]; Newton iteration from Chebyshev
// initial guesses, deterministic for fixed n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hyprad

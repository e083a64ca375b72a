#include "hyprad/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyprad {

void validate_space(const SpaceParams& sp) {
  if (sp.d != 1 && sp.d != 2 && sp.d != 4 && sp.d != 8) {
    throw std::invalid_argument("space: d must be one of 1, 2, 4, 8");
  }
  if (sp.p < 0) throw std::invalid_argument("space: p must be >= 0");
  if (sp.q < 1) throw std::invalid_argument("space: q must be >= 1");
  if (sp.d == 8 && !(sp.p == 0 && sp.q == 1)) {
    throw std::invalid_argument("space: d=8 requires (p,q) = (0,1)");
  }
  if (!sp.projective && sp.d != 1) {
    throw std::invalid_argument("space: non-projective quotients exist only for d=1");
  }
}

DerivedConstants derive_constants(const SpaceParams& sp) {
  validate_space(sp);
  DerivedConstants dc;
  const int dp = sp.d * sp.p;
  const int dq = sp.d * sp.q;
  dc.twice_rho_q = dp + dq + 2 * (sp.d - 1);
  dc.twice_rho_1 = std::abs(dp - dq) + 2 * (sp.d - 1);
  dc.alpha = dp - 1;
  if (sp.p < sp.q) {
    const int beta = sp.d * (sp.q - sp.p) - 1;
    dc.beta = beta;
    // largest integer strictly below (beta+1)/2
    dc.k0 = (beta % 2 == 0) ? beta / 2 : (beta - 1) / 2;
  }
  if (sp.p >= sp.q) {
    dc.block_dims = {sp.d * (sp.p - sp.q), dq, sp.d - 1};
  } else {
    dc.block_dims = {dp, sp.d * (sp.q - sp.p), sp.d - 1};
  }
  dc.nstar_dim = dc.block_dims[0] + dc.block_dims[1] + dc.block_dims[2];
  return dc;
}

namespace {

SeriesParam classify(const SpaceParams& sp, int twice_lambda, int mu) {
  SeriesParam s;
  s.twice_lambda = twice_lambda;
  s.mu = mu;
  const bool mu_even = (mu % 2 == 0);
  s.spherical = mu_even && mu <= 0;
  s.exceptional = s.spherical && mu < 0;
  s.cuspidal = sp.projective ? !s.spherical : mu > 0;
  return s;
}

}  // namespace

std::vector<SeriesParam> enumerate_series(const SpaceParams& sp, double lambda_max) {
  validate_space(sp);
  std::vector<SeriesParam> out;
  if (lambda_max <= 0.0) return out;
  const DerivedConstants dc = derive_constants(sp);

  if (sp.projective && sp.q == 1 && sp.d == 1) {
    // Exceptional parametrization: lambda of both signs, |lambda| + rho_q an
    // even integer, nothing spherical, everything cuspidal.
    const int two_rho = dc.twice_rho_q;  // = p + 1, doubled
    for (int twice_abs = 1; 0.5 * twice_abs <= lambda_max + 1e-12; ++twice_abs) {
      // |lambda| + rho_q in 2Z <=> twice_abs + two_rho in 4Z
      if ((twice_abs + two_rho) % 4 != 0) continue;
      SeriesParam s;
      s.twice_lambda = twice_abs;
      s.qd1_branch = true;
      s.cuspidal = true;
      out.push_back(s);
      SeriesParam neg = s;
      neg.twice_lambda = -twice_abs;
      out.push_back(neg);
    }
    std::sort(out.begin(), out.end(), [](const SeriesParam& a, const SeriesParam& b) {
      return a.twice_lambda < b.twice_lambda;
    });
    return out;
  }

  const int base_twice = sp.d * sp.q - sp.d * sp.p - 2;  // 2*((dq-dp)/2 - 1)
  const int mu_step = sp.projective ? 2 : 1;
  // smallest mu of admissible parity with twice_lambda = base_twice + 2*mu > 0
  int mu = static_cast<int>(std::ceil(0.5 * (1.0 - base_twice) - 1e-12));
  if (sp.projective && mu % 2 != 0) ++mu;
  for (; base_twice + 2 * mu <= 2.0 * lambda_max + 1e-9; mu += mu_step) {
    out.push_back(classify(sp, base_twice + 2 * mu, mu));
  }
  return out;
}

std::vector<int> noncuspidal_parameters_twice(const SpaceParams& sp) {
  validate_space(sp);
  if (sp.projective && sp.q == 1 && sp.d == 1) {
    throw std::invalid_argument("noncuspidal_parameters: undefined on the q=d=1 projective branch");
  }
  // lambda_j = d(q-p)/2 - 1 - 2j for j >= 0 while positive; these are the
  // positive exponents surviving in the asymptotic expansion of the Abel
  // transform (odd-index Taylor coefficients vanish by parity).
  std::vector<int> out;
  const int base_twice = sp.d * sp.q - sp.d * sp.p - 2;
  for (int twice = base_twice; twice > 0; twice -= 4) out.push_back(twice);
  return out;
}

std::vector<double> noncuspidal_parameters(const SpaceParams& sp) {
  std::vector<double> out;
  for (int twice : noncuspidal_parameters_twice(sp)) out.push_back(0.5 * twice);
  return out;
}

}  // namespace hyprad

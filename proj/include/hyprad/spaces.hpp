#pragma once

#include <array>
#include <optional>
#include <vector>

namespace hyprad {

// A projective (or, for d=1, optionally non-projective) hyperbolic space
// X(p+1, q+1; F) with d = dim_R(F) in {1,2,4,8}. d=8 requires (p,q)=(0,1)
// and supports classification only; geometry and transforms reject it.
struct SpaceParams {
  int d = 1;
  int p = 0;
  int q = 1;
  bool projective = true;
};

// Throws std::invalid_argument when the parameters are out of range.
void validate_space(const SpaceParams& sp);

// Integer-exact structural constants of the space. Half-integer quantities
// are stored doubled. beta and k0 exist only for p < q.
struct DerivedConstants {
  int twice_rho_q = 0;             // dp + dq + 2(d-1)
  int twice_rho_1 = 0;             // |dp - dq| + 2(d-1)
  int alpha = 0;                   // dp - 1
  std::optional<int> beta;         // d(q-p) - 1          (p < q)
  std::optional<int> k0;           // largest integer < (beta+1)/2
  int nstar_dim = 0;               // free real dimension of the horospherical chart
  std::array<int, 3> block_dims{}; // free (u, v, w) real dimensions

  double rho_q() const { return 0.5 * twice_rho_q; }
  double rho_1() const { return 0.5 * twice_rho_1; }
};

DerivedConstants derive_constants(const SpaceParams& sp);

// One spectral parameter of the relative discrete series. lambda is stored
// doubled and exactly; mu is the integer offset in lambda = (dq-dp)/2 - 1 + mu.
// qd1_branch marks the projective q=d=1 family, where lambda runs over both
// signs with |lambda| + rho_q even and mu is not used.
struct SeriesParam {
  int twice_lambda = 0;
  int mu = 0;
  bool qd1_branch = false;
  bool spherical = false;
  bool exceptional = false;
  bool cuspidal = false;

  double lambda() const { return 0.5 * twice_lambda; }
};

// All series parameters with |lambda| <= lambda_max, sorted by increasing
// lambda. Projective spaces admit even mu only (integer mu when d=1 and
// non-projective); lambda > 0 except on the q=d=1 projective branch.
std::vector<SeriesParam> enumerate_series(const SpaceParams& sp, double lambda_max);

// Spectral parameters of the non-cuspidal series, largest first: these are
// exactly the spherical ones, lambda_j = d(q-p)/2 - 1 - 2j > 0. Requires a
// space outside the q=d=1 projective branch.
std::vector<double> noncuspidal_parameters(const SpaceParams& sp);
std::vector<int> noncuspidal_parameters_twice(const SpaceParams& sp);

}  // namespace hyprad

#pragma once

#include <vector>

#include "hyprad/spaces.hpp"

namespace hyprad {

// A point of the ambient F^(p+q+2), flattened to (p+q+2)*d reals; block j
// occupies coords[j*d .. (j+1)*d) as (re, im_1, ..., im_{d-1}). Blocks
// 0..p carry the positive part of the form, p+1..p+q+1 the negative part.
struct Point {
  SpaceParams params;
  std::vector<double> coords;

  double block_norm2(int j) const;
  double positive_norm2() const;  // blocks 0..p
  double negative_norm2() const;  // blocks p+1..p+q+1
  double form() const;            // [x,x] = positive - negative
};

// Base point x_0 = e_{p+q+2}.
Point base_point(const SpaceParams& sp);

// Free horospherical coordinates: u and v hold the unconstrained F-entries
// of the nilpotent parameter, w its Im F part.
struct NStarCoords {
  std::vector<double> u;  // d*p reals (p<q) or d*(p-q) reals (p>=q)
  std::vector<double> v;  // d*(q-p) reals (p<q) or d*q reals (p>=q)
  std::vector<double> w;  // d-1 reals
};

// Unpacks a flat free vector of length nstar_dim. Layout: the block that
// seeds the isotropy coupling first (u for p<q, v for p>=q), then the free
// remainder of the other block, then w.
NStarCoords nstar_embed(const SpaceParams& sp, const std::vector<double>& free_coords);

// x = a_s exp(N(u,v,w)) x_0 on the hyperboloid [x,x] = -1.
Point hyperboloid_point(const SpaceParams& sp, double s, const NStarCoords& n);

struct PolarPoint {
  double t = 0.0;      // radial coordinate, >= 0
  double theta = 0.0;  // angular coordinate; range depends on the quotient
};

// (t, theta) of a hyperboloid point. theta lives in [0, pi/2] for projective
// spaces with q > 1 or d > 1, in [0, pi) for projective q = d = 1, in
// [0, 2pi) for non-projective q = 1 and in [0, pi] for non-projective q > 1.
PolarPoint polar_coords(const Point& x);

// Scalar reduction of the chart: the three radial chart coordinates
// (x = |u-part|, y = |free v-part|, z = e^s |w|) determine every rotation
// invariant of the point. v is the kernel coordinate of the reduced Radon
// integrals. cos_theta_cosh_t carries the sign convention of the d=1
// non-projective quotient; sinh_t is signed only for p = 0 non-projective.
struct ReducedCoords {
  double cosh2_t = 1.0;
  double cos2theta_cosh2t = 1.0;
  double v = 0.0;
  double cos_theta_cosh_t = 1.0;
  double sinh_t = 0.0;
};

ReducedCoords reduced_coords(const SpaceParams& sp, double s, double x, double y, double z);

}  // namespace hyprad

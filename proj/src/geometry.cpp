#include "hyprad/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hyprad {

namespace {

double sqnorm(const std::vector<double>& v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return acc;
}

void require_geometry_support(const SpaceParams& sp) {
  validate_space(sp);
  if (sp.d == 8) {
    throw std::invalid_argument("geometry: d=8 is classification-only");
  }
}

}  // namespace

double Point::block_norm2(int j) const {
  double acc = 0.0;
  for (int i = 0; i < params.d; ++i) {
    const double c = coords[static_cast<std::size_t>(j) * params.d + i];
    acc += c * c;
  }
  return acc;
}

double Point::positive_norm2() const {
  double acc = 0.0;
  for (int j = 0; j <= params.p; ++j) acc += block_norm2(j);
  return acc;
}

double Point::negative_norm2() const {
  double acc = 0.0;
  for (int j = params.p + 1; j <= params.p + params.q + 1; ++j) acc += block_norm2(j);
  return acc;
}

double Point::form() const { return positive_norm2() - negative_norm2(); }

Point base_point(const SpaceParams& sp) {
  require_geometry_support(sp);
  Point x;
  x.params = sp;
  x.coords.assign(static_cast<std::size_t>(sp.p + sp.q + 2) * sp.d, 0.0);
  x.coords[static_cast<std::size_t>(sp.p + sp.q + 1) * sp.d] = 1.0;
  return x;
}

NStarCoords nstar_embed(const SpaceParams& sp, const std::vector<double>& free_coords) {
  require_geometry_support(sp);
  const DerivedConstants dc = derive_constants(sp);
  if (static_cast<int>(free_coords.size()) != dc.nstar_dim) {
    throw std::invalid_argument("nstar_embed: free vector length must equal nstar_dim");
  }
  NStarCoords n;
  const auto [n0, n1, n2] = dc.block_dims;
  auto it = free_coords.begin();
  if (sp.p < sp.q) {
    n.u.assign(it, it + n0);
    n.v.assign(it + n0, it + n0 + n1);
  } else {
    n.v.assign(it, it + n1);
    n.u.assign(it + n1, it + n1 + n0);
  }
  n.w.assign(it + n0 + n1, it + n0 + n1 + n2);
  return n;
}

Point hyperboloid_point(const SpaceParams& sp, double s, const NStarCoords& n) {
  require_geometry_support(sp);
  const int d = sp.d;
  const int min_pq = std::min(sp.p, sp.q);
  if (static_cast<int>(n.u.size()) != d * (sp.p - (sp.p < sp.q ? 0 : sp.q)) ||
      static_cast<int>(n.v.size()) != d * (sp.q - (sp.p < sp.q ? sp.p : 0)) ||
      static_cast<int>(n.w.size()) != d - 1) {
    throw std::invalid_argument("hyperboloid_point: block sizes do not match the space");
  }

  // Full u in F^p and v in F^q: the first min(p,q) entries of the longer side
  // are locked to reversed conjugates of the shorter side's entries, which
  // keeps N(u,v,w) nilpotent of the right shape. Only conjugation enters.
  std::vector<double> u_full(static_cast<std::size_t>(d) * sp.p, 0.0);
  std::vector<double> v_full(static_cast<std::size_t>(d) * sp.q, 0.0);
  auto put_conj_reversed = [d](std::vector<double>& dst, const std::vector<double>& src, int count) {
    // dst[k] = -conj(src[count-1-k]) for F-entries k = 0..count-1
    for (int k = 0; k < count; ++k) {
      const int sk = count - 1 - k;
      dst[static_cast<std::size_t>(k) * d] = -src[static_cast<std::size_t>(sk) * d];
      for (int i = 1; i < d; ++i) {
        dst[static_cast<std::size_t>(k) * d + i] = src[static_cast<std::size_t>(sk) * d + i];
      }
    }
  };
  if (sp.p < sp.q) {
    u_full = n.u;
    put_conj_reversed(v_full, n.u, min_pq);
    std::copy(n.v.begin(), n.v.end(), v_full.begin() + static_cast<std::size_t>(d) * min_pq);
  } else {
    v_full = n.v;
    put_conj_reversed(u_full, n.v, min_pq);
    std::copy(n.u.begin(), n.u.end(), u_full.begin() + static_cast<std::size_t>(d) * min_pq);
  }

  const double c = 0.5 * (sqnorm(u_full) - sqnorm(v_full));
  const double es = std::exp(s);

  Point x;
  x.params = sp;
  x.coords.assign(static_cast<std::size_t>(sp.p + sp.q + 2) * d, 0.0);
  // first block: sinh s + e^s(c + w)
  x.coords[0] = std::sinh(s) + es * c;
  for (int i = 1; i < d; ++i) x.coords[i] = es * n.w[i - 1];
  // middle positive blocks: conj(u)
  for (int k = 0; k < sp.p; ++k) {
    const std::size_t dst = static_cast<std::size_t>(1 + k) * d;
    x.coords[dst] = u_full[static_cast<std::size_t>(k) * d];
    for (int i = 1; i < d; ++i) x.coords[dst + i] = -u_full[static_cast<std::size_t>(k) * d + i];
  }
  // middle negative blocks: -conj(v)
  for (int k = 0; k < sp.q; ++k) {
    const std::size_t dst = static_cast<std::size_t>(sp.p + 1 + k) * d;
    x.coords[dst] = -v_full[static_cast<std::size_t>(k) * d];
    for (int i = 1; i < d; ++i) x.coords[dst + i] = v_full[static_cast<std::size_t>(k) * d + i];
  }
  // last block: cosh s + e^s(c + w)
  const std::size_t last = static_cast<std::size_t>(sp.p + sp.q + 1) * d;
  x.coords[last] = std::cosh(s) + es * c;
  for (int i = 1; i < d; ++i) x.coords[last + i] = es * n.w[i - 1];
  return x;
}

PolarPoint polar_coords(const Point& x) {
  const SpaceParams& sp = x.params;
  require_geometry_support(sp);
  PolarPoint pp;
  // positive = negative - 1 on the hyperboloid; the positive side is the
  // numerically stable source for t.
  pp.t = std::asinh(std::sqrt(x.positive_norm2()));
  const double cosh_t = std::sqrt(x.negative_norm2());
  const std::size_t last = static_cast<std::size_t>(sp.p + sp.q + 1) * sp.d;

  if (sp.projective) {
    if (sp.q == 1 && sp.d == 1) {
      // q=d=1: theta is an angle mod pi in the oriented (x_B, x_last) plane.
      double th = std::atan2(x.coords[static_cast<std::size_t>(sp.p + 1)], x.coords[last]);
      if (th < 0.0) th += M_PI;
      if (th >= M_PI) th -= M_PI;
      pp.theta = th;
      return pp;
    }
    double abs_last = 0.0;
    for (int i = 0; i < sp.d; ++i) abs_last += x.coords[last + i] * x.coords[last + i];
    abs_last = std::sqrt(abs_last);
    double ratio = cosh_t > 0.0 ? abs_last / cosh_t : 1.0;
    ratio = std::min(1.0, std::max(0.0, ratio));
    pp.theta = std::acos(ratio);
    return pp;
  }

  // non-projective (d = 1)
  const double xl = x.coords[last];
  if (sp.q == 1) {
    double th = std::atan2(x.coords[static_cast<std::size_t>(sp.p + 1)], xl);
    if (th < 0.0) th += 2.0 * M_PI;
    pp.theta = th;
    return pp;
  }
  double b_norm = 0.0;
  for (int j = sp.p + 1; j <= sp.p + sp.q; ++j) b_norm += x.block_norm2(j);
  pp.theta = std::atan2(std::sqrt(b_norm), xl);
  return pp;
}

ReducedCoords reduced_coords(const SpaceParams& sp, double s, double x, double y, double z) {
  require_geometry_support(sp);
  ReducedCoords rc;
  const double es = std::exp(s);
  const double ems = std::exp(-s);
  if (sp.p < sp.q) {
    const double v = -std::sinh(s) + 0.5 * es * y * y;
    rc.v = v;
    rc.cosh2_t = 1.0 + x * x + v * v + z * z;
    rc.cos_theta_cosh_t = ems - v;  // = cosh s - e^s y^2 / 2
    rc.cos2theta_cosh2t = rc.cos_theta_cosh_t * rc.cos_theta_cosh_t + z * z;
    rc.sinh_t = (sp.p == 0 && !sp.projective && sp.d == 1) ? -v : std::sqrt(rc.cosh2_t - 1.0);
  } else {
    const double v = std::sinh(s) + 0.5 * es * y * y;
    rc.v = v;
    rc.cosh2_t = 1.0 + x * x + y * y + v * v + z * z;
    rc.cos_theta_cosh_t = ems + v;  // = cosh s + e^s y^2 / 2 >= cosh s
    rc.cos2theta_cosh2t = rc.cos_theta_cosh_t * rc.cos_theta_cosh_t + z * z;
    rc.sinh_t = std::sqrt(rc.cosh2_t - 1.0);
  }
  return rc;
}

}  // namespace hyprad

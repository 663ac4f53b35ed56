#include "squaremap/radial_maps.hpp"

#include <cmath>

namespace squaremap {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Largest root in [0,1] of p(t) = t^3 - c2 t + c0, c2 = x^2+y^2, c0 = x^2 y^2.
// The seed t0 = sqrt(c2 - c0) gives p(t0) = c0 (1 - t0) >= 0 on the convex
// increasing branch (p'(t0) = 2 c2 - 3 c0 >= c2/2 > 0), so Newton descends
// monotonically onto the root. Bracket [sqrt(c2/3), 1] guards the fallback.
double cubic_root_half(double c2, double c0) {
  if (c0 == 0.0) return std::sqrt(c2);
  double lo = std::sqrt(c2 / 3.0);
  double hi = 1.0;
  double t = std::sqrt(c2 - c0);
  for (int i = 0; i < 200; ++i) {
    double p = (t * t - c2) * t + c0;
    double dp = 3.0 * t * t - c2;
    if (p > 0.0) {
      hi = t;
    } else if (p < 0.0) {
      lo = t;
    } else {
      return t;
    }
    double tn = dp != 0.0 ? t - p / dp : 0.5 * (lo + hi);
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    if (std::abs(tn - t) <= 1e-16 * (1.0 + t)) return tn;
    t = tn;
  }
  return t;
}

// Unique positive root of g(tau) = c0 tau^3 + tau - c2 (g' >= 1 everywhere).
double cubic_root_four_tau(double c2, double c0) {
  if (c0 == 0.0) return c2;
  double lo = 0.0;
  double hi = c2 < 1.0 ? c2 : 1.0;
  double tau = c2 - c0;  // seed below the root; convexity keeps Newton under it
  for (int i = 0; i < 200; ++i) {
    double g = (c0 * tau * tau) * tau + tau - c2;
    double dg = 3.0 * c0 * tau * tau + 1.0;
    if (g > 0.0) {
      hi = tau;
    } else if (g < 0.0) {
      lo = tau;
    } else {
      return tau;
    }
    double tn = tau - g / dg;
    if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
    if (std::abs(tn - tau) <= 1e-16 * (1.0 + tau)) return tn;
    tau = tn;
  }
  return tau;
}

}  // namespace

double RadialProfile::forward_t(double x, double y) const {
  double c2 = x * x + y * y;
  double c0 = (x * x) * (y * y);
  switch (tag) {
    case ProfileTag::T1:
      return safe_sqrt(c2 - c0);
    case ProfileTag::T2:
      return std::sqrt(c2 / (1.0 + c0));
    case ProfileTag::T3:
      // tau = t^2 solves c0 tau^2 + tau - c2 = 0; stable positive branch.
      return std::sqrt(2.0 * c2 / (1.0 + std::sqrt(1.0 + 4.0 * c0 * c2)));
    case ProfileTag::ThreeHalves:
      // positive branch of t^2 + c0 t - c2... quadratic in t:
      // t = (sqrt(c0^2 + 4 c2) - c0)/2; no cancellation, sqrt >= 3 c0.
      return 0.5 * (std::sqrt(c0 * c0 + 4.0 * c2) - c0);
    case ProfileTag::Half:
      return cubic_root_half(c2, c0);
    case ProfileTag::Four:
      return std::sqrt(cubic_root_four_tau(c2, c0));
  }
  return 0.0;
}

SquarePoint stretch_disc_to_square(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  double r = std::sqrt(u * u + v * v);
  if (u * u >= v * v) {
    return SquarePoint(sgn(u) * r, sgn(u) * (v / u) * r);
  }
  return SquarePoint(sgn(v) * (u / v) * r, sgn(v) * r);
}

DiscPoint stretch_square_to_disc(const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double x = p.x, y = p.y;
  double r = std::sqrt(x * x + y * y);
  if (x * x >= y * y) {
    return DiscPoint(sgn(x) * x * x / r, sgn(x) * x * y / r);
  }
  return DiscPoint(sgn(y) * x * y / r, sgn(y) * y * y / r);
}

DiscPoint fgs_square_to_disc(const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double x = p.x, y = p.y;
  double c2 = x * x + y * y;
  double t = safe_sqrt(c2 - (x * x) * (y * y));
  double r = std::sqrt(c2);
  return DiscPoint(t * x / r, t * y / r);
}

SquarePoint fgs_disc_to_square(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  double d = u * u + v * v;
  // x = sgn(u)/(|v| sqrt2) sqrt(d - sqrt(d (d - 4 u^2 v^2))) rearranged with
  // d - sqrt(d g^2) = 4 u^2 v^2 d / (d + sqrt(d) g): uniformly accurate near
  // the axes where the printed difference cancels catastrophically.
  double g = safe_sqrt(d - 4.0 * (u * u) * (v * v));
  double s = kSqrt2 * std::sqrt(d) / std::sqrt(d + std::sqrt(d) * g);
  return SquarePoint(u * s, v * s);
}

DiscPoint two_sq_square_to_disc(const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double x = p.x, y = p.y;
  double den = std::sqrt(1.0 + (x * x) * (y * y));
  return DiscPoint(x / den, y / den);
}

SquarePoint two_sq_disc_to_square(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  // x = sgn(uv)/(v sqrt2) sqrt(1 - sqrt(1-4u^2v^2)); the numerator rewrites to
  // 4 u^2 v^2 / (1 + sqrt(1-4u^2v^2)), collapsing to a radial scale factor.
  double g = safe_sqrt(1.0 - 4.0 * (u * u) * (v * v));
  double s = kSqrt2 / std::sqrt(1.0 + g);
  return SquarePoint(u * s, v * s);
}

DiscPoint three_sq_square_to_disc(const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double x = p.x, y = p.y;
  double c2 = x * x + y * y;
  double e = std::sqrt(1.0 + 4.0 * (x * x) * (y * y) * c2);
  double s = kSqrt2 / std::sqrt(1.0 + e);
  return DiscPoint(x * s, y * s);
}

SquarePoint three_sq_disc_to_square(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  double d = u * u + v * v;
  double e = safe_sqrt(1.0 - 4.0 * (u * u) * (v * v) * d);
  double s = kSqrt2 / std::sqrt(1.0 + e);
  return SquarePoint(u * s, v * s);
}

namespace {

void require_soluble(RadialProfile profile) {
  switch (profile.tag) {
    case ProfileTag::ThreeHalves:
    case ProfileTag::Half:
    case ProfileTag::Four:
      return;
    default:
      throw std::invalid_argument(
          "profile mapping requires one of the soluble exponents 3/2, 1/2, 4");
  }
}

}  // namespace

DiscPoint profile_square_to_disc(RadialProfile profile, const SquarePoint& p) {
  require_soluble(profile);
  if (auto a = axis_passthrough(p)) return *a;
  double t = profile.forward_t(p.x, p.y);
  double r = std::sqrt(p.x * p.x + p.y * p.y);
  return DiscPoint(t * p.x / r, t * p.y / r);
}

SquarePoint profile_disc_to_square(RadialProfile profile, const DiscPoint& p) {
  require_soluble(profile);
  if (auto a = axis_passthrough(p)) return *a;
  double target = std::sqrt(p.u * p.u + p.v * p.v);
  double dx = p.u / target;
  double dy = p.v / target;
  double perim = 1.0 / std::max(std::abs(dx), std::abs(dy));
  // forward_t runs 0 -> 1 over [0, perim] along the ray, so the bracket below
  // always holds a sign change; bisect it down to machine width.
  double lo = 0.0, hi = perim;
  int iter = 0;
  while (hi - lo > 4e-16 * perim) {
    if (++iter > 200) {
      throw std::runtime_error("profile inverse failed to converge");
    }
    double mid = 0.5 * (lo + hi);
    double f = profile.forward_t(mid * dx, mid * dy) - target;
    if (f == 0.0) {
      lo = hi = mid;
    } else if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double rho = 0.5 * (lo + hi);
  return SquarePoint(rho * dx, rho * dy);
}

}  // namespace squaremap

#include "squaremap/grid_maps.hpp"

#include <cmath>

namespace squaremap {

namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752;

}  // namespace

DiscPoint eg_square_to_disc(const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double x = p.x, y = p.y;
  return DiscPoint(x * std::sqrt(1.0 - 0.5 * y * y),
                   y * std::sqrt(1.0 - 0.5 * x * x));
}

SquarePoint eg_disc_to_square_trig(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  double tx = 2.0 + u * u - v * v;
  double ty = 2.0 - u * u + v * v;
  double su = 2.0 * std::sqrt(2.0) * u;
  double sv = 2.0 * std::sqrt(2.0) * v;
  double x = 0.5 * safe_sqrt(tx + su) - 0.5 * safe_sqrt(tx - su);
  double y = 0.5 * safe_sqrt(ty + sv) - 0.5 * safe_sqrt(ty - sv);
  return SquarePoint(x, y);
}

SquarePoint eg_disc_to_square_biquadratic(const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double u = p.u, v = p.v;
  double tx = 2.0 + u * u - v * v;
  double ty = 2.0 - u * u + v * v;
  // sgn(u)/sqrt2 sqrt(tx - sqrt(tx^2 - 8u^2)) with the difference rewritten
  // as 8u^2/(tx + sqrt(tx^2 - 8u^2)): exact at the diagonal rim, no
  // cancellation near the axes.
  double gx = safe_sqrt(tx * tx - 8.0 * u * u);
  double gy = safe_sqrt(ty * ty - 8.0 * v * v);
  double x = 2.0 * u / std::sqrt(tx + gx);
  double y = 2.0 * v / std::sqrt(ty + gy);
  return SquarePoint(x, y);
}

DiscPoint seg_square_to_disc(SquelchParam qp, const SquarePoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double q = qp.q;
  double x = p.x, y = p.y;
  double x1 = x * x - 1.0;
  double y1 = y * y - 1.0;
  double a2 = q + 1.0 - q * y * y;
  double b2 = q + 1.0 - q * x * x;
  // Factored numerators/denominator: every term is <= 0 in the square, so the
  // quotients never cancel. den = 0 only at the four exact corners, where the
  // diagonal limit is (+-sqrt2/2, +-sqrt2/2) for every q.
  double den = (1.0 + q) * ((1.0 - q) * (x1 + y1 + x1 * y1) + q * x1 + q * y1);
  if (den == 0.0) {
    return DiscPoint(sgn(x) * kHalfSqrt2, sgn(y) * kHalfSqrt2);
  }
  double nu = a2 * (y1 + q * x1);
  double nv = b2 * (x1 + q * y1);
  return DiscPoint(x * std::sqrt(nu / den), y * std::sqrt(nv / den));
}

SquarePoint seg_disc_to_square(SquelchParam qp, const DiscPoint& p) {
  if (auto a = axis_passthrough(p)) return *a;
  double q = qp.q;
  double u = p.u, v = p.v;
  double au = q + 1.0 + q * u * u - v * v;
  double av = q + 1.0 - u * u + q * v * v;
  double du = safe_sqrt(au * au - 4.0 * q * (q + 1.0) * u * u);
  double dv = safe_sqrt(av * av - 4.0 * q * (q + 1.0) * v * v);
  // sgn(u)/sqrt(2q) sqrt(au - du) with au - du = 4q(q+1)u^2/(au + du), which
  // folds the 1/sqrt(2q) away and survives q -> 0 and u -> 0.
  double x = u * std::sqrt(2.0 * (q + 1.0) / (au + du));
  double y = v * std::sqrt(2.0 * (q + 1.0) / (av + dv));
  return SquarePoint(x, y);
}

}  // namespace squaremap

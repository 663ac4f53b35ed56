#pragma once

#include "squaremap/core.hpp"

// Nowell's elliptical grid mapping (both published inverse forms) and the
// squelched generalization: a one-parameter family whose vertical grid lines
// map to ellipses u^2/x0^2 + v^2/(2 - x0^2) = 1 at q = 1 and flatten toward
// the identity as q -> 0.

namespace squaremap {

/// Squelching parameter. The ellipse semi-axes of the squelched grid are
/// a = sqrt(q+1-q y^2), b = sqrt(q+1-q x^2); q = 1 is the plain elliptical
/// grid. Values below 1e-6 are rejected: 1/sqrt(2q) amplifies roundoff past
/// the library's tolerances there.
struct SquelchParam {
  double q{1.0};

  SquelchParam() = default;
  explicit SquelchParam(double q_) : q(q_) {
    if (!(q_ > 0.0 && q_ <= 1.0)) {
      throw std::domain_error("squelching parameter must satisfy 0 < q <= 1");
    }
    if (q_ < 1e-6) {
      throw std::domain_error("squelching parameter below 1e-6 floor");
    }
  }
};

/// Elliptical grid mapping, u = x sqrt(1 - y^2/2), v = y sqrt(1 - x^2/2).
[[nodiscard]] DiscPoint eg_square_to_disc(const SquarePoint& p);

/// Trig-derived inverse:
/// x = 1/2 sqrt(2+u^2-v^2+2 sqrt2 u) - 1/2 sqrt(2+u^2-v^2-2 sqrt2 u).
[[nodiscard]] SquarePoint eg_disc_to_square_trig(const DiscPoint& p);

/// Biquadratic-derived inverse, retained as a cross-check of the trig form:
/// x = sgn(u)/sqrt2 sqrt(2+u^2-v^2 - sqrt((2+u^2-v^2)^2 - 8u^2)).
[[nodiscard]] SquarePoint eg_disc_to_square_biquadratic(const DiscPoint& p);

/// Squelched elliptical grid, forward direction. Reduces exactly to
/// eg_square_to_disc at q = 1; square corners are taken by continuity along
/// the diagonal (the raw quotient is 0/0 there).
[[nodiscard]] DiscPoint seg_square_to_disc(SquelchParam qp,
                                           const SquarePoint& p);

/// Squelched elliptical grid, inverse direction.
[[nodiscard]] SquarePoint seg_disc_to_square(SquelchParam qp,
                                             const DiscPoint& p);

}  // namespace squaremap

#pragma once

#include "squaremap/core.hpp"

// Radially-constrained mappings: every point moves only along its ray from
// the origin, so the polar angle is preserved. A mapping of this family is
// determined by the squareness-radius relation s = h(t) of the squircle
// continuum it uses; the closed-form members here are simple stretching,
// FG-squircular (s = t), 2-squircular (s = t^2), 3-squircular (s = t^3), and
// the soluble-exponent profiles s = t^{3/2}, t^{1/2}, t^4.

namespace squaremap {

enum class ProfileTag {
  T1,           // s = t     (FG-squircular)
  T2,           // s = t^2   (2-squircular)
  T3,           // s = t^3   (3-squircular)
  ThreeHalves,  // s = t^{3/2}, quadratic in t
  Half,         // s = t^{1/2}, depressed cubic in t
  Four,         // s = t^4,  depressed cubic in tau = t^2
};

/// One member of the squircular continuum, identified by the exponent of
/// s = h(t). forward_t solves the contour equation
/// x^2 + y^2 - h(t)^2/t^2 * x^2 y^2 = t^2 for the squircle radius t of the
/// contour through (x, y).
struct RadialProfile {
  ProfileTag tag{ProfileTag::T1};

  /// Squircle radius t in [0, 1] of the contour through a square point.
  /// Strictly increasing along every ray from the origin.
  [[nodiscard]] double forward_t(double x, double y) const;
};

/// Linear stretch of each ray so the rim meets the square perimeter.
[[nodiscard]] SquarePoint stretch_disc_to_square(const DiscPoint& p);
[[nodiscard]] DiscPoint stretch_square_to_disc(const SquarePoint& p);

/// FG-squircular mapping, u = x sqrt(x^2+y^2-x^2y^2)/sqrt(x^2+y^2); maps
/// concentric circles to the shrunken Fernandez-Guasti squircles
/// x^2 + y^2 - x^2 y^2 = t^2.
[[nodiscard]] DiscPoint fgs_square_to_disc(const SquarePoint& p);
[[nodiscard]] SquarePoint fgs_disc_to_square(const DiscPoint& p);

/// 2-squircular mapping, u = x/sqrt(1+x^2y^2); contour family
/// x^2 + y^2 - t^2 x^2 y^2 = t^2.
[[nodiscard]] DiscPoint two_sq_square_to_disc(const SquarePoint& p);
[[nodiscard]] SquarePoint two_sq_disc_to_square(const DiscPoint& p);

/// 3-squircular mapping; t solves x^2 y^2 t^4 + t^2 - x^2 - y^2 = 0.
[[nodiscard]] DiscPoint three_sq_square_to_disc(const SquarePoint& p);
[[nodiscard]] SquarePoint three_sq_disc_to_square(const DiscPoint& p);

/// Radial map assembled from a soluble profile's forward_t via
/// u = t x / sqrt(x^2+y^2), v = t y / sqrt(x^2+y^2).
/// profile must be one of {ThreeHalves, Half, Four}.
[[nodiscard]] DiscPoint profile_square_to_disc(RadialProfile profile,
                                               const SquarePoint& p);

/// Numeric inverse of profile_square_to_disc: 1-D bracketed root find for the
/// radius along the ray through p, bracket [0, 1/max(|cos a|,|sin a|)].
/// Non-convergence after 200 iterations signals a monotonicity violation.
[[nodiscard]] SquarePoint profile_disc_to_square(RadialProfile profile,
                                                 const DiscPoint& p);

}  // namespace squaremap

#pragma once

#include <complex>

#include "squaremap/core.hpp"

// Complex arithmetic, elliptic special functions at the fixed modulus
// k = 1/sqrt(2), and the canonical-space Schwarz-Christoffel disc<->square
// mapping:
//
//   square -> disc:  w = (1-i)/sqrt2 * cn(K_e (1+i)/2 (x+yi) - K_e, 1/sqrt2)
//   disc -> square:  z = (1-i)/(-K_e) * F(acos((1+i)/sqrt2 (u+vi)), 1/sqrt2)
//                        + (1-i)
//
// K_e = K(1/sqrt2) ~ 1.854. This modulus is self-complementary (k = k'),
// which keeps every real sub-evaluation at the same parameter m = 1/2.

namespace squaremap {

using Complex = std::complex<double>;

/// Signals a pole/branch failure of the elliptic machinery; only reachable
/// near the four rim points that correspond to square corners.
struct singularity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// k_e = K(1/sqrt2); l_e = lemniscate constant Gamma(1/4)^2/(2 sqrt(2 pi)),
/// related by k_e = l_e/sqrt2.
struct EllipticConstants {
  double k_e;
  double l_e;
};

/// K(1/sqrt2) by arithmetic-geometric mean iteration: K = pi/(2 agm(1, k')).
[[nodiscard]] double compute_k_e();

/// Constants computed once at first use (all racers compute identical values).
[[nodiscard]] const EllipticConstants& elliptic_constants();

struct JacobiTriple {
  double sn;
  double cn;
  double dn;
};

/// Real Jacobi elliptic functions at parameter m = k^2 by the descending
/// Landen/AGM recursion (capped at 16 halvings; quadratic convergence needs
/// ~5 at m = 1/2).
[[nodiscard]] JacobiTriple jacobi_real(double u, double m);

/// cn(z, 1/sqrt2) for complex z via the addition decomposition
///   cn(a+bi) = (cn_a cn_b - i sn_a dn_a sn_b dn_b) / (cn_b^2 + m sn_a^2 sn_b^2)
/// with the b-parts at the complementary parameter (also 1/2 here).
/// Rejects arguments within 1e-9 of a pole (z = iK_e mod the period lattice).
[[nodiscard]] Complex jacobi_cn_complex(Complex z);

/// Principal complex arccosine, re(result) in [0, pi]:
/// acos(w) = -i Log(w + i sqrt(1 - w^2)).
[[nodiscard]] Complex complex_arccos(Complex w);

/// Carlson symmetric integral R_F(x, y, z) by the duplication algorithm
/// (principal square roots; arguments off the negative real axis). Throws
/// singularity_error if the duplication fails to contract.
[[nodiscard]] Complex carlson_rf(Complex x, Complex y, Complex z);

/// Incomplete elliptic integral F(phi, 1/sqrt2) for complex amplitude via
/// F = sin(phi) R_F(cos^2 phi, 1 - m sin^2 phi, 1), reflected through
/// F(phi) = 2 K_e - F(pi - phi) when re(phi) > pi/2 so the
/// R_F representation stays on its valid sheet.
[[nodiscard]] Complex elliptic_f_complex(Complex phi);

/// Schwarz-Christoffel mapping, disc to square. Inputs within 1e-9 of the rim
/// are pulled back radially and the result is pushed onto the perimeter by
/// sup-norm normalization (the corner pre-images are derivative
/// singularities, handled as limiting values).
[[nodiscard]] SquarePoint sc_disc_to_square(const DiscPoint& p);

/// Schwarz-Christoffel mapping, square to disc.
[[nodiscard]] DiscPoint sc_square_to_disc(const SquarePoint& p);

/// Evenness variant of sc_square_to_disc using cn(-K_e (1+i)/2 z + K_e);
/// agrees with the primary form to roundoff (cn is even).
[[nodiscard]] DiscPoint sc_square_to_disc_plus_ke(const SquarePoint& p);

/// Compact complex forms: w = sqrt(-i) cn(K_e z sqrt(i/2) - K_e) and
/// z = -sqrt(-2i)/K_e F(acos(w sqrt(i))) + 1 - i. Same mapping written with
/// rotation factors sqrt(+-i); retained as an equivalence cross-check.
[[nodiscard]] DiscPoint sc_square_to_disc_compact(const SquarePoint& p);
[[nodiscard]] SquarePoint sc_disc_to_square_compact(const DiscPoint& p);

}  // namespace squaremap

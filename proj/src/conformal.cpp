#include "squaremap/conformal.hpp"

#include <cmath>

namespace squaremap {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kHalfPi = 1.5707963267948966;
constexpr double kHalfSqrt2 = 0.70710678118654752;
constexpr double kParamM = 0.5;  // m = k^2 at the self-complementary modulus

// (1+i)/sqrt2 and (1-i)/sqrt2, the rim rotation factors sqrt(+-i).
const Complex kRotPlus(kHalfSqrt2, kHalfSqrt2);
const Complex kRotMinus(kHalfSqrt2, -kHalfSqrt2);

constexpr double kRimPullback = 1e-9;
constexpr double kPoleEps = 1e-9;

}  // namespace

double compute_k_e() {
  double a = 1.0;
  double b = kHalfSqrt2;  // k' = sqrt(1 - 1/2)
  for (int i = 0; i < 32 && a - b > 1e-17 * a; ++i) {
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return kPi / (2.0 * a);
}

const EllipticConstants& elliptic_constants() {
  // 2 sqrt(2 pi) grouping: the lemniscate constant 2.62205755...,
  // satisfying k_e = l_e/sqrt2.
  static const EllipticConstants kConstants{
      compute_k_e(),
      std::tgamma(0.25) * std::tgamma(0.25) / (2.0 * std::sqrt(2.0 * kPi))};
  return kConstants;
}

JacobiTriple jacobi_real(double u, double m) {
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  // Descending Landen transformation (AGM form): push the modulus to zero,
  // evaluate the circular amplitude there, then fold the amplitude back up.
  double a[17], c[17];
  a[0] = 1.0;
  c[0] = std::sqrt(m);
  double b = std::sqrt(1.0 - m);
  int n = 0;
  while (n < 16 && std::abs(c[n]) > 1e-17 * a[n]) {
    double an = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    a[n + 1] = an;
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int i = n; i >= 1; --i) {
    double s = c[i] / a[i] * std::sin(phi);
    if (s > 1.0) s = 1.0;
    if (s < -1.0) s = -1.0;
    phi = 0.5 * (phi + std::asin(s));
  }
  double sn = std::sin(phi);
  double cn = std::cos(phi);
  // dn = sqrt(1 - m sn^2) is positive for every real argument and perfectly
  // conditioned at m = 1/2 (dn >= 1/sqrt2).
  double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

Complex jacobi_cn_complex(Complex z) {
  const double K = elliptic_constants().k_e;  // = K' at this modulus
  double xi = z.real();
  double eta = z.imag();
  double dx = std::remainder(xi, 2.0 * K);
  double dy = std::remainder(eta - K, 2.0 * K);
  if (dx * dx + dy * dy < kPoleEps * kPoleEps) {
    throw singularity_error("argument within 1e-9 of a cn pole");
  }
  JacobiTriple re = jacobi_real(xi, kParamM);
  JacobiTriple im = jacobi_real(eta, 1.0 - kParamM);
  double den = im.cn * im.cn + kParamM * re.sn * re.sn * im.sn * im.sn;
  return Complex(re.cn * im.cn / den,
                 -re.sn * re.dn * im.sn * im.dn / den);
}

Complex complex_arccos(Complex w) {
  Complex one_minus = 1.0 - w * w;
  if (one_minus.imag() == 0.0) {
    // Pin -0 to +0: keeps inputs that land exactly on the branch cut of
    // sqrt on one deterministic sheet.
    one_minus = Complex(one_minus.real(), 0.0);
  }
  Complex s = std::sqrt(one_minus);
  Complex inner(w.real() - s.imag(), w.imag() + s.real());  // w + i sqrt(1-w^2)
  Complex lg = std::log(inner);
  return Complex(lg.imag(), -lg.real());  // -i log(...)
}

Complex carlson_rf(Complex x, Complex y, Complex z) {
  // Duplication: each round contracts the spread of {x,y,z} by ~4; the
  // fifth-order Taylor tail at spread 2e-3 leaves relative error ~1e-17,
  // within the 1e-14 contract.
  for (int i = 0; i < 64; ++i) {
    Complex sx = std::sqrt(x), sy = std::sqrt(y), sz = std::sqrt(z);
    Complex lam = sx * sy + sy * sz + sz * sx;
    x = 0.25 * (x + lam);
    y = 0.25 * (y + lam);
    z = 0.25 * (z + lam);
    Complex mu = (x + y + z) / 3.0;
    double scale = std::abs(mu);
    if (scale == 0.0) break;
    double spread = std::max({std::abs(x - mu), std::abs(y - mu),
                              std::abs(z - mu)}) /
                    scale;
    if (spread < 2e-3) {
      Complex big_x = 1.0 - x / mu;
      Complex big_y = 1.0 - y / mu;
      Complex big_z = -big_x - big_y;
      Complex e2 = big_x * big_y - big_z * big_z;
      Complex e3 = big_x * big_y * big_z;
      return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 -
              3.0 / 44.0 * e2 * e3) /
             std::sqrt(mu);
    }
  }
  throw singularity_error("carlson duplication did not contract");
}

Complex elliptic_f_complex(Complex phi) {
  const double K = elliptic_constants().k_e;
  if (phi.real() > kHalfPi) {
    // F(phi) = 2K - F(pi - phi): keeps the R_F representation on the sheet
    // where it equals the integral.
    return 2.0 * K - elliptic_f_complex(Complex(kPi, 0.0) - phi);
  }
  if (phi.real() < -kHalfPi) {
    return -elliptic_f_complex(-phi);
  }
  Complex s = std::sin(phi);
  Complex c = std::cos(phi);
  return s * carlson_rf(c * c, 1.0 - kParamM * s * s, Complex(1.0, 0.0));
}

namespace {

// F(acos(what)) on the branch consistent with cn: used by both the
// componentwise and the compact disc-to-square forms. The principal branch is
// correct except possibly on the diagonals, where the amplitude's cosine
// squares onto the negative real axis; the conjugate retry restores
// cn(F) = what there.
Complex sc_inverse_integral(Complex what) {
  Complex phi = complex_arccos(what);
  for (int attempt = 0; attempt < 2; ++attempt) {
    Complex ph = attempt == 0 ? phi : std::conj(phi);
    try {
      Complex f = elliptic_f_complex(ph);
      if (attempt == 1) f = std::conj(f);
      if (std::abs(jacobi_cn_complex(f) - what) < 1e-9) return f;
    } catch (const singularity_error&) {
    }
  }
  throw singularity_error("no consistent branch for the inverse integral");
}

struct RimPulled {
  Complex w;
  bool pulled;
};

RimPulled pull_back_rim(const DiscPoint& p) {
  double r = std::hypot(p.u, p.v);
  if (r > 1.0 - kRimPullback) {
    double s = (1.0 - kRimPullback) / r;
    return {Complex(p.u * s, p.v * s), true};
  }
  return {Complex(p.u, p.v), false};
}

SquarePoint finish_disc_to_square(Complex z, bool pulled) {
  double x = z.real();
  double y = z.imag();
  if (pulled) {
    // Rim inputs: push the result onto the perimeter (sup-norm normalize).
    double mag = std::max(std::abs(x), std::abs(y));
    x /= mag;
    y /= mag;
  } else {
    // Interior results are in-square analytically; shave the odd ulp.
    if (std::abs(x) > 1.0 && std::abs(x) < 1.0 + 1e-8) x = sgn(x);
    if (std::abs(y) > 1.0 && std::abs(y) < 1.0 + 1e-8) y = sgn(y);
  }
  return SquarePoint(x, y);
}

DiscPoint finish_square_to_disc(Complex w) {
  double r2 = std::norm(w);
  if (r2 > 1.0) {
    double r = std::sqrt(r2);
    if (r < 1.0 + 1e-9) w /= r;
  }
  return DiscPoint(w.real(), w.imag());
}

}  // namespace

SquarePoint sc_disc_to_square(const DiscPoint& p) {
  const double K = elliptic_constants().k_e;
  RimPulled in = pull_back_rim(p);
  Complex f = sc_inverse_integral(kRotPlus * in.w);
  Complex z = Complex(1.0, -1.0) / (-K) * f + Complex(1.0, -1.0);
  return finish_disc_to_square(z, in.pulled);
}

DiscPoint sc_square_to_disc(const SquarePoint& p) {
  const double K = elliptic_constants().k_e;
  Complex zeta = Complex(0.5 * K, 0.5 * K) * Complex(p.x, p.y) - K;
  return finish_square_to_disc(kRotMinus * jacobi_cn_complex(zeta));
}

DiscPoint sc_square_to_disc_plus_ke(const SquarePoint& p) {
  const double K = elliptic_constants().k_e;
  Complex zeta = Complex(-0.5 * K, -0.5 * K) * Complex(p.x, p.y) + K;
  return finish_square_to_disc(kRotMinus * jacobi_cn_complex(zeta));
}

DiscPoint sc_square_to_disc_compact(const SquarePoint& p) {
  const double K = elliptic_constants().k_e;
  const Complex sqrt_neg_i = std::sqrt(Complex(0.0, -1.0));
  const Complex sqrt_i_half = std::sqrt(Complex(0.0, 0.5));
  Complex z(p.x, p.y);
  return finish_square_to_disc(sqrt_neg_i *
                               jacobi_cn_complex(K * z * sqrt_i_half - K));
}

SquarePoint sc_disc_to_square_compact(const DiscPoint& p) {
  const double K = elliptic_constants().k_e;
  const Complex sqrt_i = std::sqrt(Complex(0.0, 1.0));
  const Complex sqrt_neg_2i = std::sqrt(Complex(0.0, -2.0));
  RimPulled in = pull_back_rim(p);
  Complex f = sc_inverse_integral(in.w * sqrt_i);
  Complex z = -sqrt_neg_2i / K * f + Complex(1.0, -1.0);
  return finish_disc_to_square(z, in.pulled);
}

}  // namespace squaremap

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

// Canonical mapping space: the unit disc {u^2 + v^2 <= 1} paired with the
// circumscribing square [-1,1]^2, plus the signum convention and the numeric
// guards shared by every mapping.

namespace squaremap {

/// Accept-tolerance on domain membership; lets rim points survive round trips.
inline constexpr double kDomainEps = 1e-12;

/// Separates radicand roundoff from genuine domain violations. All radicands
/// are O(1) polynomials of in-domain inputs, so true violations land far
/// below -kClampEps.
inline constexpr double kClampEps = 1e-9;

/// Proximity threshold for the axis identity convention (u=0 or v=0).
inline constexpr double kAxisEps = 1e-15;

/// Coordinate pair constrained to the closed unit disc.
struct DiscPoint {
  double u{0.0};
  double v{0.0};

  DiscPoint() = default;
  DiscPoint(double u_, double v_) : u(u_), v(v_) {
    if (u * u + v * v > 1.0 + kDomainEps) {
      throw std::domain_error("DiscPoint outside unit disc: (" +
                              std::to_string(u_) + ", " + std::to_string(v_) +
                              ")");
    }
  }
};

/// Coordinate pair constrained to the closed square [-1,1]^2.
struct SquarePoint {
  double x{0.0};
  double y{0.0};

  SquarePoint() = default;
  SquarePoint(double x_, double y_) : x(x_), y(y_) {
    double m = std::abs(x) > std::abs(y) ? std::abs(x) : std::abs(y);
    if (m > 1.0 + kDomainEps) {
      throw std::domain_error("SquarePoint outside [-1,1]^2: (" +
                              std::to_string(x_) + ", " + std::to_string(y_) +
                              ")");
    }
  }
};

enum class MappingKind {
  SimpleStretch,
  FgSquircular,
  TwoSquircular,
  ThreeSquircular,
  ThreeHalvesSquircular,
  HalfSquircular,
  FourSquircular,
  EllipticalGrid,
  SquelchedEllipticalGrid,
  SchwarzChristoffel,
};

/// Catalog entry for one mapping; carries the squelching parameter q for
/// SquelchedEllipticalGrid (present iff that kind, 0 < q <= 1).
struct MappingId {
  MappingKind kind{MappingKind::SimpleStretch};
  std::optional<double> q{};

  MappingId() = default;
  explicit MappingId(MappingKind k) : kind(k) {
    if (k == MappingKind::SquelchedEllipticalGrid) {
      throw std::domain_error("SquelchedEllipticalGrid requires q");
    }
  }
  MappingId(MappingKind k, double q_) : kind(k), q(q_) {
    if (k != MappingKind::SquelchedEllipticalGrid) {
      throw std::domain_error("q is only valid for SquelchedEllipticalGrid");
    }
    if (!(q_ > 0.0 && q_ <= 1.0)) {
      throw std::domain_error("squelching parameter must satisfy 0 < q <= 1");
    }
  }
};

/// Three-case signum: -1, 0, or 1.
[[nodiscard]] constexpr double sgn(double x) noexcept {
  if (x > 0.0) return 1.0;
  if (x < 0.0) return -1.0;
  return 0.0;
}

/// sqrt guarded against radicands that exact algebra makes nonnegative but
/// floating point makes slightly negative. Inputs below -kClampEps are a
/// genuine domain violation, not roundoff.
[[nodiscard]] double safe_sqrt(double r);

/// The paper's division-by-zero convention: points on either axis map to
/// themselves (x=u, y=v). Returns the identity-mapped point when u or v is
/// within kAxisEps of zero, empty otherwise. Consulted first by every
/// algebraic mapping; their formulas otherwise divide by u, v, or sqrt(u^2+v^2).
[[nodiscard]] std::optional<SquarePoint> axis_passthrough(const DiscPoint& p);
[[nodiscard]] std::optional<DiscPoint> axis_passthrough(const SquarePoint& p);

}  // namespace squaremap

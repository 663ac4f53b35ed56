#pragma once

#include <optional>
#include <string>

#include "squaremap/core.hpp"
#include "squaremap/mapping.hpp"

// Numerical verification of the mapping properties: radial constraint,
// squircularity, conformality (Cauchy-Riemann residual), and equiareal
// distortion, aggregated into per-mapping reports over interior grids.

namespace squaremap {

enum class Direction {
  kDiscToSquare,
  kSquareToDisc,
};

/// 2x2 matrix of partial derivatives of the mapped coordinates with respect
/// to the input coordinates.
struct Jacobian2 {
  double j11{0.0};
  double j12{0.0};
  double j21{0.0};
  double j22{0.0};

  [[nodiscard]] double det() const { return j11 * j22 - j12 * j21; }
  [[nodiscard]] double frobenius() const;
};

/// Central-difference Jacobian, error O(h^2).
/// Requires h in [1e-7, 1e-3] and an interior point with margin >= 2h
/// (sup-norm to the square boundary, or 1 - |p| for the disc); a stencil
/// leaving the domain signals insufficient margin.
[[nodiscard]] Jacobian2 jacobian_fd(const MappingId& id, Direction dir,
                                    double px, double py, double h);

/// Scale-invariant conformality defect
/// (|j11 - j22| + |j12 + j21|) / max(||J||_F, 1e-30); zero exactly when the
/// differential is a similarity with positive determinant (Cauchy-Riemann).
[[nodiscard]] double cr_residual(const Jacobian2& j);

/// Absolute angular difference between a square point and its disc image,
/// wrapped to the shortest signed difference. Zero for radial mappings.
/// Rejects the origin.
[[nodiscard]] double radial_deviation(const MappingId& id,
                                      const SquarePoint& p);

/// Measured analogue of the mapping comparison table: extrema of round-trip
/// error, angular deviation, Cauchy-Riemann residual, |det J|, and (where a
/// contour condition is documented) squircularity residual over an interior
/// square grid.
struct DistortionReport {
  MappingId mapping{MappingKind::FgSquircular};
  int grid_n{0};
  double max_roundtrip{0.0};
  double max_angle_dev{0.0};
  double cr_residual_max{0.0};
  double area_ratio_min{0.0};
  double area_ratio_max{0.0};
  std::optional<double> squircularity_residual_max;
};

/// Sweeps an n x n grid with margin 0.005 (n >= 11, odd) in the square
/// domain, mapping square -> disc. Deterministic for fixed inputs and
/// independent of the worker count (rows are independent; reductions are
/// order-insensitive extrema combined in row order).
[[nodiscard]] DistortionReport verify_report(const MappingId& id, int grid_n);

/// Reference implementation of verify_report without worker parallelism;
/// must produce bit-identical reports.
[[nodiscard]] DistortionReport verify_report_serial(const MappingId& id,
                                                    int grid_n);

/// Single-line JSON object with stable key order: mapping, grid_n,
/// max_roundtrip, max_angle_dev, cr_residual_max, area_ratio_min,
/// area_ratio_max, squircularity_residual_max (null when not applicable).
[[nodiscard]] std::string report_json(const DistortionReport& report);

/// Applies the per-mapping thresholds: round-trip (1e-12 closed-form, 1e-10
/// numeric-inverse profiles, 1e-8 conformal and strongly squelched), angular
/// classification (< 1e-12 radial, > 0.01 non-radial), Cauchy-Riemann
/// classification (< 1e-4 conformal; > 0.05 for the non-conformal mappings
/// the classification is asserted for), area ratio > 1.05, squircularity
/// residual < 1e-12 where documented.
[[nodiscard]] bool report_passes(const DistortionReport& report);

}  // namespace squaremap

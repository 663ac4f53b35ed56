#pragma once

#include <optional>
#include <string>
#include <vector>

#include "squaremap/core.hpp"

// Uniform dispatch over the mapping catalog, plus the CLI id vocabulary.

namespace squaremap {

/// Exact CLI id for a mapping kind, e.g. "fg-squircular". The squelch
/// parameter is not part of the id; it travels separately (--q).
[[nodiscard]] std::string mapping_id_string(MappingKind kind);

/// Parses a CLI mapping id. q must be present iff the id is
/// squelched-elliptical-grid; violations throw std::invalid_argument.
[[nodiscard]] MappingId parse_mapping_id(const std::string& id,
                                         std::optional<double> q);

/// All ten kinds in catalog order (squelched listed once, q-less).
[[nodiscard]] const std::vector<MappingKind>& mapping_catalog();

/// True for the seven mappings that move points only along rays from the
/// origin (simple stretch, FG-squircular, 2-, 3-, 3/2-, 1/2-, 4-squircular).
[[nodiscard]] bool is_radial(MappingKind kind);

/// The documented circle-contour image family inside the square, used by the
/// squircularity checks. t is the disc radius of the contour.
enum class SquircularityForm {
  kNone,
  kStandard,  // x^2 + y^2 - x^2 y^2       = t^2  (FG-squircular, elliptical grid)
  kTSquared,  // x^2 + y^2 - t^2 x^2 y^2   = t^2  (2-squircular)
  kTFourth,   // x^2 + y^2 - t^4 x^2 y^2   = t^2  (3-squircular)
};

[[nodiscard]] SquircularityForm squircularity_form(MappingKind kind);

/// |left - right| of the applicable contour condition at a mapped pair;
/// 0 for mappings without a documented condition.
[[nodiscard]] double squircularity_residual(SquircularityForm form,
                                            const SquarePoint& s,
                                            const DiscPoint& d);

[[nodiscard]] DiscPoint map_square_to_disc(const MappingId& id,
                                           const SquarePoint& p);
[[nodiscard]] SquarePoint map_disc_to_square(const MappingId& id,
                                             const DiscPoint& p);

}  // namespace squaremap

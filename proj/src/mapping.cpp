#include "squaremap/mapping.hpp"

#include <cmath>
#include <stdexcept>

#include "squaremap/conformal.hpp"
#include "squaremap/grid_maps.hpp"
#include "squaremap/radial_maps.hpp"

namespace squaremap {

std::string mapping_id_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::SimpleStretch:
      return "simple-stretch";
    case MappingKind::FgSquircular:
      return "fg-squircular";
    case MappingKind::TwoSquircular:
      return "2-squircular";
    case MappingKind::ThreeSquircular:
      return "3-squircular";
    case MappingKind::ThreeHalvesSquircular:
      return "3half-squircular";
    case MappingKind::HalfSquircular:
      return "half-squircular";
    case MappingKind::FourSquircular:
      return "4-squircular";
    case MappingKind::EllipticalGrid:
      return "elliptical-grid";
    case MappingKind::SquelchedEllipticalGrid:
      return "squelched-elliptical-grid";
    case MappingKind::SchwarzChristoffel:
      return "schwarz-christoffel";
  }
  throw std::invalid_argument("unknown mapping kind");
}

MappingId parse_mapping_id(const std::string& id, std::optional<double> q) {
  for (MappingKind kind : mapping_catalog()) {
    if (id != mapping_id_string(kind)) continue;
    if (kind == MappingKind::SquelchedEllipticalGrid) {
      if (!q) {
        throw std::invalid_argument(
            "squelched-elliptical-grid requires --q");
      }
      return MappingId(kind, *q);
    }
    if (q) {
      throw std::invalid_argument("--q is only valid for "
                                  "squelched-elliptical-grid");
    }
    return MappingId(kind);
  }
  throw std::invalid_argument("unknown mapping id: " + id);
}

const std::vector<MappingKind>& mapping_catalog() {
  static const std::vector<MappingKind> kCatalog{
      MappingKind::SimpleStretch,
      MappingKind::FgSquircular,
      MappingKind::TwoSquircular,
      MappingKind::ThreeSquircular,
      MappingKind::ThreeHalvesSquircular,
      MappingKind::HalfSquircular,
      MappingKind::FourSquircular,
      MappingKind::EllipticalGrid,
      MappingKind::SquelchedEllipticalGrid,
      MappingKind::SchwarzChristoffel,
  };
  return kCatalog;
}

bool is_radial(MappingKind kind) {
  switch (kind) {
    case MappingKind::SimpleStretch:
    case MappingKind::FgSquircular:
    case MappingKind::TwoSquircular:
    case MappingKind::ThreeSquircular:
    case MappingKind::ThreeHalvesSquircular:
    case MappingKind::HalfSquircular:
    case MappingKind::FourSquircular:
      return true;
    default:
      return false;
  }
}

SquircularityForm squircularity_form(MappingKind kind) {
  switch (kind) {
    case MappingKind::FgSquircular:
    case MappingKind::EllipticalGrid:
      return SquircularityForm::kStandard;
    case MappingKind::TwoSquircular:
      return SquircularityForm::kTSquared;
    case MappingKind::ThreeSquircular:
      return SquircularityForm::kTFourth;
    default:
      return SquircularityForm::kNone;
  }
}

double squircularity_residual(SquircularityForm form, const SquarePoint& s,
                              const DiscPoint& d) {
  double x2 = s.x * s.x;
  double y2 = s.y * s.y;
  double t2 = d.u * d.u + d.v * d.v;
  switch (form) {
    case SquircularityForm::kNone:
      return 0.0;
    case SquircularityForm::kStandard:
      return std::abs(x2 + y2 - x2 * y2 - t2);
    case SquircularityForm::kTSquared:
      return std::abs(x2 + y2 - t2 * x2 * y2 - t2);
    case SquircularityForm::kTFourth:
      return std::abs(x2 + y2 - t2 * t2 * x2 * y2 - t2);
  }
  throw std::invalid_argument("unknown squircularity form");
}

DiscPoint map_square_to_disc(const MappingId& id, const SquarePoint& p) {
  switch (id.kind) {
    case MappingKind::SimpleStretch:
      return stretch_square_to_disc(p);
    case MappingKind::FgSquircular:
      return fgs_square_to_disc(p);
    case MappingKind::TwoSquircular:
      return two_sq_square_to_disc(p);
    case MappingKind::ThreeSquircular:
      return three_sq_square_to_disc(p);
    case MappingKind::ThreeHalvesSquircular:
      return profile_square_to_disc({ProfileTag::ThreeHalves}, p);
    case MappingKind::HalfSquircular:
      return profile_square_to_disc({ProfileTag::Half}, p);
    case MappingKind::FourSquircular:
      return profile_square_to_disc({ProfileTag::Four}, p);
    case MappingKind::EllipticalGrid:
      return eg_square_to_disc(p);
    case MappingKind::SquelchedEllipticalGrid:
      return seg_square_to_disc(SquelchParam(*id.q), p);
    case MappingKind::SchwarzChristoffel:
      return sc_square_to_disc(p);
  }
  throw std::invalid_argument("unknown mapping kind");
}

SquarePoint map_disc_to_square(const MappingId& id, const DiscPoint& p) {
  switch (id.kind) {
    case MappingKind::SimpleStretch:
      return stretch_disc_to_square(p);
    case MappingKind::FgSquircular:
      return fgs_disc_to_square(p);
    case MappingKind::TwoSquircular:
      return two_sq_disc_to_square(p);
    case MappingKind::ThreeSquircular:
      return three_sq_disc_to_square(p);
    case MappingKind::ThreeHalvesSquircular:
      return profile_disc_to_square({ProfileTag::ThreeHalves}, p);
    case MappingKind::HalfSquircular:
      return profile_disc_to_square({ProfileTag::Half}, p);
    case MappingKind::FourSquircular:
      return profile_disc_to_square({ProfileTag::Four}, p);
    case MappingKind::EllipticalGrid:
      return eg_disc_to_square_trig(p);
    case MappingKind::SquelchedEllipticalGrid:
      return seg_disc_to_square(SquelchParam(*id.q), p);
    case MappingKind::SchwarzChristoffel:
      return sc_disc_to_square(p);
  }
  throw std::invalid_argument("unknown mapping kind");
}

}  // namespace squaremap

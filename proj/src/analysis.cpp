#include "squaremap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace squaremap {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kGridMargin = 0.005;
constexpr double kStencilH = 1e-5;

double wrap_angle(double a) { return std::abs(std::remainder(a, kTwoPi)); }

}  // namespace

double Jacobian2::frobenius() const {
  return std::sqrt(j11 * j11 + j12 * j12 + j21 * j21 + j22 * j22);
}

Jacobian2 jacobian_fd(const MappingId& id, Direction dir, double px, double py,
                      double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) {
    throw std::invalid_argument("stencil step outside [1e-7, 1e-3]");
  }
  double margin = dir == Direction::kSquareToDisc
                      ? 1.0 - std::max(std::abs(px), std::abs(py))
                      : 1.0 - std::hypot(px, py);
  if (margin < 2.0 * h) {
    throw std::domain_error("stencil leaves the domain; need margin >= 2h");
  }
  auto eval = [&](double x, double y) {
    if (dir == Direction::kSquareToDisc) {
      DiscPoint d = map_square_to_disc(id, SquarePoint(x, y));
      return std::pair<double, double>{d.u, d.v};
    }
    SquarePoint s = map_disc_to_square(id, DiscPoint(x, y));
    return std::pair<double, double>{s.x, s.y};
  };
  auto [xr, yr] = eval(px + h, py);
  auto [xl, yl] = eval(px - h, py);
  auto [xu, yu] = eval(px, py + h);
  auto [xd, yd] = eval(px, py - h);
  double inv2h = 1.0 / (2.0 * h);
  return {(xr - xl) * inv2h, (xu - xd) * inv2h,
          (yr - yl) * inv2h, (yu - yd) * inv2h};
}

double cr_residual(const Jacobian2& j) {
  double defect = std::abs(j.j11 - j.j22) + std::abs(j.j12 + j.j21);
  return defect / std::max(j.frobenius(), 1e-30);
}

double radial_deviation(const MappingId& id, const SquarePoint& p) {
  if (p.x == 0.0 && p.y == 0.0) {
    throw std::invalid_argument("angular deviation undefined at the origin");
  }
  DiscPoint d = map_square_to_disc(id, p);
  return wrap_angle(std::atan2(p.y, p.x) - std::atan2(d.v, d.u));
}

namespace {

struct RowExtrema {
  double roundtrip{0.0};
  double angle{0.0};
  double cr{0.0};
  double squircularity{0.0};
  double det_min{std::numeric_limits<double>::infinity()};
  double det_max{0.0};
};

RowExtrema sweep_row(const MappingId& id, int n, int row,
                     SquircularityForm form) {
  RowExtrema e;
  double lo = -1.0 + kGridMargin;
  double step = 2.0 * (1.0 - kGridMargin) / (n - 1);
  double y = lo + row * step;
  for (int i = 0; i < n; ++i) {
    double x = lo + i * step;
    SquarePoint p(x, y);
    DiscPoint fwd = map_square_to_disc(id, p);
    SquarePoint back = map_disc_to_square(id, fwd);
    e.roundtrip = std::max(
        e.roundtrip, std::max(std::abs(back.x - x), std::abs(back.y - y)));
    if (x != 0.0 || y != 0.0) {
      e.angle = std::max(
          e.angle, wrap_angle(std::atan2(y, x) - std::atan2(fwd.v, fwd.u)));
    }
    Jacobian2 j =
        jacobian_fd(id, Direction::kSquareToDisc, x, y, kStencilH);
    e.cr = std::max(e.cr, cr_residual(j));
    double det = std::abs(j.det());
    e.det_min = std::min(e.det_min, det);
    e.det_max = std::max(e.det_max, det);
    if (form != SquircularityForm::kNone) {
      e.squircularity =
          std::max(e.squircularity, squircularity_residual(form, p, fwd));
    }
  }
  return e;
}

DistortionReport sweep(const MappingId& id, int grid_n, bool parallel) {
  if (grid_n < 11 || grid_n % 2 == 0) {
    throw std::invalid_argument("grid_n must be odd and >= 11");
  }
  SquircularityForm form = squircularity_form(id.kind);
  std::vector<RowExtrema> rows(grid_n);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int row = 0; row < grid_n; ++row) {
      rows[row] = sweep_row(id, grid_n, row, form);
    }
  } else {
    for (int row = 0; row < grid_n; ++row) {
      rows[row] = sweep_row(id, grid_n, row, form);
    }
  }
  DistortionReport report;
  report.mapping = id;
  report.grid_n = grid_n;
  report.area_ratio_min = std::numeric_limits<double>::infinity();
  for (const RowExtrema& e : rows) {
    report.max_roundtrip = std::max(report.max_roundtrip, e.roundtrip);
    report.max_angle_dev = std::max(report.max_angle_dev, e.angle);
    report.cr_residual_max = std::max(report.cr_residual_max, e.cr);
    report.area_ratio_min = std::min(report.area_ratio_min, e.det_min);
    report.area_ratio_max = std::max(report.area_ratio_max, e.det_max);
  }
  if (form != SquircularityForm::kNone) {
    double s = 0.0;
    for (const RowExtrema& e : rows) s = std::max(s, e.squircularity);
    report.squircularity_residual_max = s;
  }
  return report;
}

}  // namespace

DistortionReport verify_report(const MappingId& id, int grid_n) {
  return sweep(id, grid_n, true);
}

DistortionReport verify_report_serial(const MappingId& id, int grid_n) {
  return sweep(id, grid_n, false);
}

std::string report_json(const DistortionReport& report) {
  nlohmann::ordered_json j;
  j["mapping"] = mapping_id_string(report.mapping.kind);
  j["grid_n"] = report.grid_n;
  j["max_roundtrip"] = report.max_roundtrip;
  j["max_angle_dev"] = report.max_angle_dev;
  j["cr_residual_max"] = report.cr_residual_max;
  j["area_ratio_min"] = report.area_ratio_min;
  j["area_ratio_max"] = report.area_ratio_max;
  if (report.squircularity_residual_max) {
    j["squircularity_residual_max"] = *report.squircularity_residual_max;
  } else {
    j["squircularity_residual_max"] = nullptr;
  }
  return j.dump();
}

bool report_passes(const DistortionReport& report) {
  MappingKind kind = report.mapping.kind;
  double roundtrip_tol = 1e-12;
  switch (kind) {
    case MappingKind::ThreeHalvesSquircular:
    case MappingKind::HalfSquircular:
    case MappingKind::FourSquircular:
      roundtrip_tol = 1e-10;  // numeric-inverse profiles
      break;
    case MappingKind::SchwarzChristoffel:
      roundtrip_tol = 1e-8;  // two transcendental evaluations
      break;
    case MappingKind::SquelchedEllipticalGrid:
      // Strong squelching amplifies the rim cancellation in the inverse.
      roundtrip_tol = *report.mapping.q >= 0.5 ? 1e-12 : 1e-8;
      break;
    default:
      break;
  }
  if (!(report.max_roundtrip < roundtrip_tol)) return false;
  if (is_radial(kind)) {
    if (!(report.max_angle_dev < 1e-12)) return false;
  } else {
    if (!(report.max_angle_dev > 0.01)) return false;
  }
  if (kind == MappingKind::SchwarzChristoffel) {
    if (!(report.cr_residual_max < 1e-4)) return false;
  }
  if (kind == MappingKind::SimpleStretch || kind == MappingKind::FgSquircular ||
      kind == MappingKind::EllipticalGrid) {
    if (!(report.cr_residual_max > 0.05)) return false;
  }
  if (!(report.area_ratio_min > 0.0 &&
        report.area_ratio_max / report.area_ratio_min > 1.05)) {
    return false;
  }
  if (report.squircularity_residual_max &&
      !(*report.squircularity_residual_max < 1e-12)) {
    return false;
  }
  return true;
}

}  // namespace squaremap

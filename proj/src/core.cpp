#include "squaremap/core.hpp"

#include <cmath>

namespace squaremap {

double safe_sqrt(double r) {
  if (r < -kClampEps) {
    throw std::domain_error("radicand " + std::to_string(r) +
                            " below clamp tolerance: input outside domain");
  }
  return std::sqrt(r < 0.0 ? 0.0 : r);
}

std::optional<SquarePoint> axis_passthrough(const DiscPoint& p) {
  if (std::abs(p.u) <= kAxisEps || std::abs(p.v) <= kAxisEps) {
    return SquarePoint(p.u, p.v);
  }
  return std::nullopt;
}

std::optional<DiscPoint> axis_passthrough(const SquarePoint& p) {
  if (std::abs(p.x) <= kAxisEps || std::abs(p.y) <= kAxisEps) {
    return DiscPoint(p.x, p.y);
  }
  return std::nullopt;
}

}  // namespace squaremap

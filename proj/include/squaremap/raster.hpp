#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "squaremap/analysis.hpp"
#include "squaremap/core.hpp"
#include "squaremap/mapping.hpp"

// Inverse-mapped raster resampling between disc and square images, and the
// grid CSV exporter behind the figure-reproduction workflows.

namespace squaremap {

/// Row-major 8-bit RGBA image.
struct RasterImage {
  int width{0};
  int height{0};
  std::vector<std::uint8_t> pixels;

  [[nodiscard]] static RasterImage filled(int width, int height,
                                          std::array<std::uint8_t, 4> rgba);
  [[nodiscard]] const std::uint8_t* at(int i, int j) const {
    return pixels.data() + 4 * (static_cast<std::size_t>(j) * width + i);
  }
  [[nodiscard]] std::uint8_t* at(int i, int j) {
    return pixels.data() + 4 * (static_cast<std::size_t>(j) * width + i);
  }
};

struct RemapJob {
  MappingId mapping{MappingKind::FgSquircular};
  Direction direction{Direction::kDiscToSquare};
  int out_size{0};
  int supersample{1};  // 1, 2, or 4
  std::array<std::uint8_t, 4> background{0, 0, 0, 0};
};

/// Center of pixel (i, j) on an n x n canvas in canonical coordinates:
/// x = 2(i + 0.5)/n - 1, y = 1 - 2(j + 0.5)/n (rows grow downward).
[[nodiscard]] std::pair<double, double> pixel_to_canonical(int i, int j,
                                                           int n);

/// Output-driven inverse-mapped resampling: each (optionally supersampled)
/// output pixel is pulled back through the inverse of the job direction and
/// bilinearly sampled from the source (clamp-to-edge). Disc-side sampling
/// covers the source's inscribed disc. Canonical points outside the source
/// domain produce the background color. Mapping singularities at isolated
/// points resolve to the nearest valid pixel within a 3-pixel radius.
/// Deterministic and independent of worker count.
[[nodiscard]] RasterImage remap(const RasterImage& src, const RemapJob& job);

/// Reference implementation of remap without worker parallelism; must
/// produce byte-identical output.
[[nodiscard]] RasterImage remap_serial(const RasterImage& src,
                                       const RemapJob& job);

/// CSV with header "x_in,y_in,x_out,y_out": the n x n canonical lattice over
/// [-1,1]^2 in row-major order (y descending, x ascending), 17 significant
/// digits, rows whose input lies outside the direction's domain omitted.
[[nodiscard]] std::string export_grid_csv(const MappingId& id, Direction dir,
                                          int n);

}  // namespace squaremap

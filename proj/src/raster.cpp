#include "squaremap/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "squaremap/conformal.hpp"

namespace squaremap {

RasterImage RasterImage::filled(int width, int height,
                                std::array<std::uint8_t, 4> rgba) {
  RasterImage img;
  img.width = width;
  img.height = height;
  img.pixels.resize(static_cast<std::size_t>(width) * height * 4);
  for (std::size_t p = 0; p < img.pixels.size(); p += 4) {
    std::copy(rgba.begin(), rgba.end(), img.pixels.begin() + p);
  }
  return img;
}

std::pair<double, double> pixel_to_canonical(int i, int j, int n) {
  return {2.0 * (i + 0.5) / n - 1.0, 1.0 - 2.0 * (j + 0.5) / n};
}

namespace {

std::array<double, 4> sample_bilinear(const RasterImage& src, double fi,
                                      double fj) {
  auto clamp = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
  int i0 = static_cast<int>(std::floor(fi));
  int j0 = static_cast<int>(std::floor(fj));
  double a = fi - i0;
  double b = fj - j0;
  int i0c = clamp(i0, src.width - 1);
  int i1c = clamp(i0 + 1, src.width - 1);
  int j0c = clamp(j0, src.height - 1);
  int j1c = clamp(j0 + 1, src.height - 1);
  const std::uint8_t* p00 = src.at(i0c, j0c);
  const std::uint8_t* p10 = src.at(i1c, j0c);
  const std::uint8_t* p01 = src.at(i0c, j1c);
  const std::uint8_t* p11 = src.at(i1c, j1c);
  std::array<double, 4> out{};
  for (int c = 0; c < 4; ++c) {
    out[c] = (1.0 - a) * (1.0 - b) * p00[c] + a * (1.0 - b) * p10[c] +
             (1.0 - a) * b * p01[c] + a * b * p11[c];
  }
  return out;
}

// Canonical square point -> continuous source pixel coordinates.
std::pair<double, double> square_to_pixel(const RasterImage& src, double x,
                                          double y) {
  return {0.5 * (x + 1.0) * src.width - 0.5,
          0.5 * (1.0 - y) * src.height - 0.5};
}

// Canonical disc point -> continuous source pixel coordinates over the
// inscribed disc of the source.
std::pair<double, double> disc_to_pixel(const RasterImage& src, double u,
                                        double v) {
  double nd = std::min(src.width, src.height);
  return {0.5 * (src.width - nd) + 0.5 * (u + 1.0) * nd - 0.5,
          0.5 * (src.height - nd) + 0.5 * (1.0 - v) * nd - 0.5};
}

// One output pixel: supersampled pull-back and source sampling. Returns
// false when a mapping singularity was hit (resolved later).
bool render_pixel(const RasterImage& src, const RemapJob& job, int i, int j,
                  std::uint8_t* out) {
  int s = job.supersample;
  int fine_n = job.out_size * s;
  std::array<double, 4> acc{};
  for (int b = 0; b < s; ++b) {
    for (int a = 0; a < s; ++a) {
      auto [x, y] = pixel_to_canonical(i * s + a, j * s + b, fine_n);
      std::array<double, 4> sample;
      try {
        if (job.direction == Direction::kDiscToSquare) {
          // Output is the square; pull back to the source disc.
          DiscPoint d = map_square_to_disc(job.mapping, SquarePoint(x, y));
          auto [fi, fj] = disc_to_pixel(src, d.u, d.v);
          sample = sample_bilinear(src, fi, fj);
        } else if (x * x + y * y > 1.0) {
          for (int c = 0; c < 4; ++c) sample[c] = job.background[c];
        } else {
          SquarePoint sq = map_disc_to_square(job.mapping, DiscPoint(x, y));
          auto [fi, fj] = square_to_pixel(src, sq.x, sq.y);
          sample = sample_bilinear(src, fi, fj);
        }
      } catch (const singularity_error&) {
        return false;
      }
      for (int c = 0; c < 4; ++c) acc[c] += sample[c];
    }
  }
  double inv = 1.0 / (s * s);
  for (int c = 0; c < 4; ++c) {
    long v = std::lround(acc[c] * inv);
    out[c] = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
  }
  return true;
}

// Offsets within a 3-pixel radius, nearest first, deterministic order.
const std::vector<std::pair<int, int>>& fallback_offsets() {
  static const std::vector<std::pair<int, int>> kOffsets = [] {
    std::vector<std::pair<int, int>> offs;
    for (int dj = -3; dj <= 3; ++dj) {
      for (int di = -3; di <= 3; ++di) {
        if (di == 0 && dj == 0) continue;
        if (di * di + dj * dj <= 9) offs.emplace_back(di, dj);
      }
    }
    std::stable_sort(offs.begin(), offs.end(),
                     [](const auto& l, const auto& r) {
                       return l.first * l.first + l.second * l.second <
                              r.first * r.first + r.second * r.second;
                     });
    return offs;
  }();
  return kOffsets;
}

RasterImage run_remap(const RasterImage& src, const RemapJob& job,
                      bool parallel) {
  if (src.width <= 0 || src.height <= 0) {
    throw std::invalid_argument("empty source image");
  }
  if (job.out_size <= 0) throw std::invalid_argument("out_size must be > 0");
  if (job.supersample != 1 && job.supersample != 2 && job.supersample != 4) {
    throw std::invalid_argument("supersample must be 1, 2, or 4");
  }
  int n = job.out_size;
  RasterImage out;
  out.width = n;
  out.height = n;
  out.pixels.resize(static_cast<std::size_t>(n) * n * 4);
  std::vector<std::uint8_t> failed(static_cast<std::size_t>(n) * n, 0);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (!render_pixel(src, job, i, j, out.at(i, j))) {
          failed[static_cast<std::size_t>(j) * n + i] = 1;
        }
      }
    }
  } else {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if (!render_pixel(src, job, i, j, out.at(i, j))) {
          failed[static_cast<std::size_t>(j) * n + i] = 1;
        }
      }
    }
  }
  // Isolated singular pixels: copy the nearest cleanly rendered neighbor.
  // Resolved serially in row-major order against the already-final clean
  // pixels, so the result does not depend on worker scheduling.
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (!failed[static_cast<std::size_t>(j) * n + i]) continue;
      std::uint8_t* px = out.at(i, j);
      bool found = false;
      for (auto [di, dj] : fallback_offsets()) {
        int ni = i + di;
        int nj = j + dj;
        if (ni < 0 || nj < 0 || ni >= n || nj >= n) continue;
        if (failed[static_cast<std::size_t>(nj) * n + ni]) continue;
        const std::uint8_t* q = out.at(ni, nj);
        std::copy(q, q + 4, px);
        found = true;
        break;
      }
      if (!found) std::copy(job.background.begin(), job.background.end(), px);
    }
  }
  return out;
}

}  // namespace

RasterImage remap(const RasterImage& src, const RemapJob& job) {
  return run_remap(src, job, true);
}

RasterImage remap_serial(const RasterImage& src, const RemapJob& job) {
  return run_remap(src, job, false);
}

std::string export_grid_csv(const MappingId& id, Direction dir, int n) {
  if (n < 2) throw std::invalid_argument("grid n must be >= 2");
  std::string out = "x_in,y_in,x_out,y_out\n";
  char line[160];
  for (int j = 0; j < n; ++j) {
    double y = 1.0 - 2.0 * j / (n - 1);
    for (int i = 0; i < n; ++i) {
      double x = -1.0 + 2.0 * i / (n - 1);
      double ox;
      double oy;
      if (dir == Direction::kSquareToDisc) {
        DiscPoint d = map_square_to_disc(id, SquarePoint(x, y));
        ox = d.u;
        oy = d.v;
      } else {
        if (x * x + y * y > 1.0) continue;  // outside the disc domain
        SquarePoint s = map_disc_to_square(id, DiscPoint(x, y));
        ox = s.x;
        oy = s.y;
      }
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", x, y, ox,
                    oy);
      out += line;
    }
  }
  return out;
}

}  // namespace squaremap

#pragma once

#include <string>

#include "squaremap/raster.hpp"

namespace squaremap {

/// Reads a PNG file; gray, palette, RGB, and 16-bit inputs are promoted to
/// 8-bit RGBA. Throws std::runtime_error on I/O or decode failure.
[[nodiscard]] RasterImage load_png(const std::string& path);

/// Writes an 8-bit RGBA PNG. Throws std::runtime_error on failure.
void save_png(const RasterImage& image, const std::string& path);

}  // namespace squaremap

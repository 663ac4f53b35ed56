// squaremap: remap disc/square images, export mapping grids, and verify
// mapping properties from the command line.
//
// Exit codes: 0 success, 2 bad arguments, 3 I/O failure, 4 verification
// threshold failure.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "squaremap/analysis.hpp"
#include "squaremap/mapping.hpp"
#include "squaremap/png_io.hpp"
#include "squaremap/raster.hpp"

namespace {

constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerifyFailed = 4;

squaremap::Direction parse_direction(const std::string& s) {
  if (s == "disc2square") return squaremap::Direction::kDiscToSquare;
  if (s == "square2disc") return squaremap::Direction::kSquareToDisc;
  throw std::invalid_argument(
      "--direction must be disc2square or square2disc");
}

std::array<std::uint8_t, 4> parse_rgba(const std::string& hex) {
  bool ok = hex.size() == 8 &&
            std::all_of(hex.begin(), hex.end(), [](unsigned char c) {
              return std::isxdigit(c) != 0;
            });
  if (!ok) throw std::invalid_argument("--bg expects 8 hex digits RRGGBBAA");
  auto val = static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16));
  return {static_cast<std::uint8_t>(val >> 24),
          static_cast<std::uint8_t>(val >> 16),
          static_cast<std::uint8_t>(val >> 8),
          static_cast<std::uint8_t>(val)};
}

struct RemapArgs {
  std::string mapping;
  std::string direction;
  std::string in_path;
  std::string out_path;
  int size = 0;  // 0: use the source's max dimension
  int supersample = 1;
  std::string bg = "00000000";
  std::optional<double> q;
};

struct GridArgs {
  std::string mapping;
  std::string direction;
  int n = 0;
  std::string out_path;
  std::optional<double> q;
};

struct VerifyArgs {
  std::string mapping;
  int grid_n = 201;
  bool json = false;
  std::optional<double> q;
};

void add_q_option(CLI::App* sub, std::optional<double>& q) {
  sub->add_option("--q", q,
                  "squelching parameter in (0, 1]; required iff mapping is "
                  "squelched-elliptical-grid");
}

int run_remap(const RemapArgs& a) {
  squaremap::MappingId id = squaremap::parse_mapping_id(a.mapping, a.q);
  squaremap::RasterImage src = squaremap::load_png(a.in_path);
  squaremap::RemapJob job;
  job.mapping = id;
  job.direction = parse_direction(a.direction);
  job.out_size = a.size > 0 ? a.size : std::max(src.width, src.height);
  job.supersample = a.supersample;
  job.background = parse_rgba(a.bg);
  squaremap::RasterImage out = squaremap::remap(src, job);
  squaremap::save_png(out, a.out_path);
  return 0;
}

int run_grid(const GridArgs& a) {
  squaremap::MappingId id = squaremap::parse_mapping_id(a.mapping, a.q);
  std::string csv = squaremap::export_grid_csv(id, parse_direction(a.direction),
                                               a.n);
  std::ofstream out(a.out_path, std::ios::binary);
  if (!out || !(out << csv)) {
    throw std::runtime_error("cannot write " + a.out_path);
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  squaremap::MappingId id = squaremap::parse_mapping_id(a.mapping, a.q);
  squaremap::DistortionReport report = squaremap::verify_report(id, a.grid_n);
  std::cout << squaremap::report_json(report) << "\n";
  return squaremap::report_passes(report) ? 0 : kExitVerifyFailed;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Analytical disc-square mappings: image remapping, grid export, and "
      "property verification"};
  app.require_subcommand(1);

  RemapArgs remap_args;
  CLI::App* remap = app.add_subcommand(
      "remap", "Resample a PNG through a mapping (inverse-mapped bilinear)");
  remap->add_option("--mapping", remap_args.mapping, "mapping id")->required();
  remap->add_option("--direction", remap_args.direction,
                    "disc2square or square2disc")
      ->required();
  remap->add_option("--in", remap_args.in_path, "source PNG")->required();
  remap->add_option("--out", remap_args.out_path, "output PNG")->required();
  remap->add_option("--size", remap_args.size,
                    "output edge length in pixels (default: source max "
                    "dimension)");
  remap->add_option("--supersample", remap_args.supersample,
                    "samples per axis per pixel: 1, 2, or 4");
  remap->add_option("--bg", remap_args.bg,
                    "background color as RRGGBBAA hex (default 00000000)");
  add_q_option(remap, remap_args.q);

  GridArgs grid_args;
  CLI::App* grid = app.add_subcommand(
      "grid", "Export an n x n mapped lattice as CSV");
  grid->add_option("--mapping", grid_args.mapping, "mapping id")->required();
  grid->add_option("--direction", grid_args.direction,
                   "disc2square or square2disc")
      ->required();
  grid->add_option("--n", grid_args.n, "lattice points per axis (>= 2)")
      ->required();
  grid->add_option("--out", grid_args.out_path, "output CSV path")->required();
  add_q_option(grid, grid_args.q);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Measure mapping properties over an interior grid and check "
                "them against the documented thresholds");
  verify->add_option("--mapping", verify_args.mapping, "mapping id")
      ->required();
  verify->add_option("--grid", verify_args.grid_n,
                     "odd grid size >= 11 (default 201)");
  verify->add_flag("--json", verify_args.json,
                   "print the report as a single JSON line (always on; the "
                   "report is the only output format)");
  add_q_option(verify, verify_args.q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadArgs;
  }

  if (remap->parsed()) return run_remap(remap_args);
  if (grid->parsed()) return run_grid(grid_args);
  return run_verify(verify_args);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

// Compares the worker-parallel kernels against their serial reference
// implementations: the grid property sweep and the raster remap.

#include <benchmark/benchmark.h>

#include "squaremap/analysis.hpp"
#include "squaremap/raster.hpp"

namespace {

using squaremap::Direction;
using squaremap::MappingId;
using squaremap::MappingKind;

const MappingId kFg{MappingKind::FgSquircular};
const MappingId kSc{MappingKind::SchwarzChristoffel};

void BM_VerifyReport(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(squaremap::verify_report(kFg, 101));
  }
}
BENCHMARK(BM_VerifyReport);

void BM_VerifyReportSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(squaremap::verify_report_serial(kFg, 101));
  }
}
BENCHMARK(BM_VerifyReportSerial);

squaremap::RasterImage bench_source() {
  auto img = squaremap::RasterImage::filled(256, 256, {200, 80, 30, 255});
  for (int j = 0; j < img.height; ++j) {
    for (int i = 0; i < img.width; ++i) {
      img.at(i, j)[1] = static_cast<std::uint8_t>((i * 7 + j * 13) & 0xFF);
    }
  }
  return img;
}

void BM_Remap(benchmark::State& state) {
  auto src = bench_source();
  squaremap::RemapJob job;
  job.mapping = kSc;
  job.direction = Direction::kDiscToSquare;
  job.out_size = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(squaremap::remap(src, job));
  }
}
BENCHMARK(BM_Remap);

void BM_RemapSerial(benchmark::State& state) {
  auto src = bench_source();
  squaremap::RemapJob job;
  job.mapping = kSc;
  job.direction = Direction::kDiscToSquare;
  job.out_size = 256;
  for (auto _ : state) {
    benchmark::DoNotOptimize(squaremap::remap_serial(src, job));
  }
}
BENCHMARK(BM_RemapSerial);

}  // namespace

BENCHMARK_MAIN();

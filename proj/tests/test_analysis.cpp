#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "oracles.hpp"
#include "squaremap/analysis.hpp"
#include "squaremap/mapping.hpp"

using namespace squaremap;

namespace {

const MappingId kFg{MappingKind::FgSquircular};
const MappingId kStretch{MappingKind::SimpleStretch};
const MappingId kEg{MappingKind::EllipticalGrid};
const MappingId kSc{MappingKind::SchwarzChristoffel};

double max_component_diff(const Jacobian2& j, const std::array<double, 4>& a) {
  return std::max(std::max(std::abs(j.j11 - a[0]), std::abs(j.j12 - a[1])),
                  std::max(std::abs(j.j21 - a[2]), std::abs(j.j22 - a[3])));
}

bool reports_identical(const DistortionReport& a, const DistortionReport& b) {
  bool same = a.grid_n == b.grid_n && a.max_roundtrip == b.max_roundtrip &&
              a.max_angle_dev == b.max_angle_dev &&
              a.cr_residual_max == b.cr_residual_max &&
              a.area_ratio_min == b.area_ratio_min &&
              a.area_ratio_max == b.area_ratio_max;
  if (a.squircularity_residual_max.has_value() !=
      b.squircularity_residual_max.has_value()) {
    return false;
  }
  if (a.squircularity_residual_max.has_value()) {
    same = same && *a.squircularity_residual_max ==
                       *b.squircularity_residual_max;
  }
  return same;
}

}  // namespace

TEST_CASE("Jacobian2 helpers") {
  Jacobian2 j{2.0, 1.0, 1.0, 1.0};
  CHECK_EQ(j.det(), 1.0);
  Jacobian2 f{3.0, 4.0, 0.0, 0.0};
  CHECK_EQ(f.frobenius(), 5.0);
}

TEST_CASE("finite-difference Jacobian matches the hand-derived FG derivative") {
  auto oracle = oracles::fg_jacobian(0.4, 0.3);
  Jacobian2 j = jacobian_fd(kFg, Direction::kSquareToDisc, 0.4, 0.3, 1e-5);
  CHECK(max_component_diff(j, oracle) < 1e-8);

  // Central differences are O(h^2): halving h shrinks the deviation by
  // about 4; demand at least 3.5 while h is large enough that truncation
  // dominates roundoff.
  double dev1 = max_component_diff(
      jacobian_fd(kFg, Direction::kSquareToDisc, 0.4, 0.3, 4e-4), oracle);
  double dev2 = max_component_diff(
      jacobian_fd(kFg, Direction::kSquareToDisc, 0.4, 0.3, 2e-4), oracle);
  double dev3 = max_component_diff(
      jacobian_fd(kFg, Direction::kSquareToDisc, 0.4, 0.3, 1e-4), oracle);
  CHECK(dev1 / dev2 >= 3.5);
  CHECK(dev2 / dev3 >= 3.5);

  // On the axis the FG differential is the identity.
  Jacobian2 axis = jacobian_fd(kFg, Direction::kSquareToDisc, 0.5, 0.0, 1e-5);
  CHECK(std::abs(axis.j11 - 1.0) < 1e-9);
  CHECK(std::abs(axis.j22 - 1.0) < 1e-9);
  CHECK_EQ(axis.j12, 0.0);
  CHECK_EQ(axis.j21, 0.0);
}

TEST_CASE("finite-difference Jacobian matches the stretch branch derivative") {
  auto oracle = oracles::stretch_jacobian_right(0.5, 0.2);
  Jacobian2 j =
      jacobian_fd(kStretch, Direction::kSquareToDisc, 0.5, 0.2, 1e-5);
  CHECK(max_component_diff(j, oracle) < 1e-8);
}

TEST_CASE("at the center every mapping's differential is diagonal") {
  for (MappingKind kind : mapping_catalog()) {
    MappingId id = kind == MappingKind::SquelchedEllipticalGrid
                       ? MappingId(kind, 0.5)
                       : MappingId(kind);
    Jacobian2 j = jacobian_fd(id, Direction::kSquareToDisc, 0.0, 0.0, 1e-5);
    CHECK_MESSAGE(std::abs(j.j12) < 1e-10, mapping_id_string(kind));
    CHECK_MESSAGE(std::abs(j.j21) < 1e-10, mapping_id_string(kind));
    CHECK_MESSAGE(std::abs(j.j11 - j.j22) < 1e-10, mapping_id_string(kind));
  }
}

TEST_CASE("jacobian_fd validates step and margin") {
  CHECK_THROWS_AS(
      (void)jacobian_fd(kFg, Direction::kSquareToDisc, 0.2, 0.2, 9e-8),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)jacobian_fd(kFg, Direction::kSquareToDisc, 0.2, 0.2, 1.1e-3),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)jacobian_fd(kFg, Direction::kSquareToDisc, 0.9999, 0.0, 1e-3),
      std::domain_error);
  CHECK_THROWS_AS(
      (void)jacobian_fd(kFg, Direction::kDiscToSquare, 0.99999, 0.0, 1e-5),
      std::domain_error);
  CHECK_NOTHROW(
      (void)jacobian_fd(kFg, Direction::kDiscToSquare, 0.99, 0.0, 1e-5));
}

TEST_CASE("Cauchy-Riemann residual of reference differentials") {
  CHECK_EQ(cr_residual(Jacobian2{1.0, 0.0, 0.0, 1.0}), 0.0);
  double c = std::cos(0.5235987755982988), s = std::sin(0.5235987755982988);
  CHECK_EQ(cr_residual(Jacobian2{c, -s, s, c}), 0.0);
  CHECK(oracles::near(cr_residual(Jacobian2{2.0, 0.0, 0.0, 1.0}),
                      0.4472135954999579, 1e-15));
}

TEST_CASE("radial deviation distinguishes the mapping families") {
  std::mt19937 rng(67);
  std::uniform_real_distribution<double> dist(-0.99, 0.99);
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng), y = dist(rng);
    if (std::abs(x) < 1e-6 && std::abs(y) < 1e-6) continue;
    CHECK(radial_deviation(kFg, SquarePoint(x, y)) < 1e-12);
  }
  CHECK(radial_deviation(kEg, SquarePoint(0.9, 0.2)) > 0.01);
  CHECK(radial_deviation(kEg, SquarePoint(0.7, 0.0)) < 1e-15);
  CHECK_THROWS_AS((void)radial_deviation(kFg, SquarePoint(0.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("verify_report: FG-squircular at n = 201") {
  DistortionReport r = verify_report(kFg, 201);
  CHECK_EQ(r.grid_n, 201);
  CHECK(r.max_roundtrip < 1e-12);
  CHECK(r.max_angle_dev < 1e-12);
  CHECK(r.cr_residual_max > 0.05);
  CHECK(r.area_ratio_max / r.area_ratio_min > 1.05);
  REQUIRE(r.squircularity_residual_max.has_value());
  CHECK(*r.squircularity_residual_max < 1e-12);
  CHECK(report_passes(r));
}

TEST_CASE("verify_report: Schwarz-Christoffel at n = 101") {
  DistortionReport r = verify_report(kSc, 101);
  CHECK(r.max_roundtrip < 1e-8);
  CHECK(r.max_angle_dev > 0.01);
  CHECK(r.cr_residual_max < 1e-4);
  CHECK(r.area_ratio_max / r.area_ratio_min > 1.05);
  CHECK_FALSE(r.squircularity_residual_max.has_value());
  CHECK(report_passes(r));
}

TEST_CASE("verify_report: simple stretching and squelched grid") {
  DistortionReport r = verify_report(kStretch, 201);
  CHECK(r.max_roundtrip < 1e-12);
  CHECK(r.max_angle_dev < 1e-12);
  CHECK(r.area_ratio_max / r.area_ratio_min > 1.05);
  CHECK(report_passes(r));

  DistortionReport s =
      verify_report(MappingId(MappingKind::SquelchedEllipticalGrid, 0.5), 101);
  CHECK(s.max_roundtrip < 1e-12);
  CHECK(s.max_angle_dev > 0.01);
  CHECK(report_passes(s));
}

TEST_CASE("verify_report validates the grid size") {
  CHECK_THROWS_AS((void)verify_report(kFg, 10), std::invalid_argument);
  CHECK_THROWS_AS((void)verify_report(kFg, 12), std::invalid_argument);
  CHECK_THROWS_AS((void)verify_report(kFg, -5), std::invalid_argument);
  CHECK_NOTHROW((void)verify_report(kFg, 11));
}

TEST_CASE("verify_report is bit-identical across worker counts") {
  DistortionReport serial = verify_report_serial(kFg, 51);
  for (int threads : {1, 4, 8}) {
#ifdef _OPENMP
    omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    DistortionReport parallel = verify_report(kFg, 51);
    CHECK(reports_identical(serial, parallel));
  }
  DistortionReport sc_serial = verify_report_serial(kSc, 21);
#ifdef _OPENMP
  omp_set_num_threads(4);
#endif
  CHECK(reports_identical(sc_serial, verify_report(kSc, 21)));
}

TEST_CASE("report_json has a stable single-line key order") {
  DistortionReport r = verify_report(kFg, 11);
  std::string js = report_json(r);
  CHECK_EQ(js.find('\n'), std::string::npos);
  CHECK_EQ(js.rfind("{\"mapping\":\"fg-squircular\",\"grid_n\":11,\"max_roundtrip\":", 0),
           0u);
  const char* keys[] = {"\"mapping\"",        "\"grid_n\"",
                        "\"max_roundtrip\"",  "\"max_angle_dev\"",
                        "\"cr_residual_max\"", "\"area_ratio_min\"",
                        "\"area_ratio_max\"", "\"squircularity_residual_max\""};
  size_t prev = 0;
  for (const char* key : keys) {
    size_t pos = js.find(key);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= prev);
    prev = pos;
  }

  auto parsed = nlohmann::json::parse(js);
  CHECK_EQ(parsed["grid_n"], 11);
  CHECK_EQ(parsed["mapping"], "fg-squircular");
  CHECK(parsed["squircularity_residual_max"].is_number());

  // Mappings without a documented contour condition report null.
  std::string stretch_js = report_json(verify_report(kStretch, 11));
  CHECK(stretch_js.find("\"squircularity_residual_max\":null") !=
        std::string::npos);
}

TEST_CASE("report_passes applies the per-family thresholds") {
  DistortionReport good;
  good.mapping = kFg;
  good.grid_n = 201;
  good.max_roundtrip = 1e-13;
  good.max_angle_dev = 1e-13;
  good.cr_residual_max = 0.5;
  good.area_ratio_min = 0.01;
  good.area_ratio_max = 1.0;
  good.squircularity_residual_max = 1e-13;
  CHECK(report_passes(good));

  DistortionReport bad = good;
  bad.max_roundtrip = 1e-11;
  CHECK_FALSE(report_passes(bad));

  bad = good;
  bad.max_angle_dev = 1e-3;  // a radial mapping must stay radial
  CHECK_FALSE(report_passes(bad));

  bad = good;
  bad.cr_residual_max = 0.01;  // FG must be visibly non-conformal
  CHECK_FALSE(report_passes(bad));

  bad = good;
  bad.area_ratio_min = 0.99;  // no mapping here is equiareal
  CHECK_FALSE(report_passes(bad));

  bad = good;
  bad.squircularity_residual_max = 1e-11;
  CHECK_FALSE(report_passes(bad));

  DistortionReport sc;
  sc.mapping = kSc;
  sc.grid_n = 101;
  sc.max_roundtrip = 1e-9;
  sc.max_angle_dev = 0.4;
  sc.cr_residual_max = 1e-6;
  sc.area_ratio_min = 1e-4;
  sc.area_ratio_max = 1.7;
  CHECK(report_passes(sc));

  DistortionReport sc_bad = sc;
  sc_bad.cr_residual_max = 1e-3;  // conformality violated
  CHECK_FALSE(report_passes(sc_bad));

  sc_bad = sc;
  sc_bad.max_roundtrip = 1e-7;
  CHECK_FALSE(report_passes(sc_bad));

  sc_bad = sc;
  sc_bad.max_angle_dev = 1e-3;  // the conformal map is not radial
  CHECK_FALSE(report_passes(sc_bad));
}

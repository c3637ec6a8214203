#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/extension.hpp"
#include "stackedcc/geometry_fit.hpp"
#include "stackedcc/special_configs.hpp"

using namespace stackedcc;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kTwoOverSqrt3 = 2.0 / std::sqrt(3.0);

std::string error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Configuration named(NamedKind kind, std::vector<double> masses = {}, double m0 = 1.0, int n = 0,
                    double scale = 1.0) {
  return named_config(kind, {std::move(masses), m0, n, scale});
}

}  // namespace

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}

TEST_CASE("A(n) closed forms and long double oracle") {
  CHECK(cosecant_sum(2) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(cosecant_sum(3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(cosecant_sum(4) == doctest::Approx((2 * kSqrt2 + 1) / 4).epsilon(1e-15));
  for (int n : {5, 17, 100, 472, 473, 600, 5000}) {
    CHECK(std::abs(cosecant_sum(n) - double(oracle::cosecant_sum(n))) <= 1e-14 * cosecant_sum(n));
  }
  CHECK(ngon_report(3).ratio == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(error_code_of([] { cosecant_sum(1); }) == "invalid_argument");
}

TEST_CASE("A(n) agrees with U of the unit n-gon") {
  for (int n : {3, 4, 7, 12, 40}) {
    const auto c = named(NamedKind::RegularNgon, {}, 1.0, n);
    CHECK(double(oracle::potential(c)) == doctest::Approx(n * cosecant_sum(n)).epsilon(1e-13));
    CHECK(double(oracle::r0(c)) == doctest::Approx(ngon_report(n).ratio).epsilon(1e-13));
  }
}

TEST_CASE("threshold crossings") {
  CHECK(ngon_report(472).pyramidal_ok);
  CHECK_FALSE(ngon_report(473).pyramidal_ok);
  CHECK(ngon_report(8).masscenter_pyramid_ok);
  CHECK_FALSE(ngon_report(9).masscenter_pyramid_ok);
  CHECK(ngon_report(52).r0_eq_R_side == 1);
  CHECK(ngon_report(53).r0_eq_R_side == -1);
  CHECK(ngon_report(8).ratio == doctest::Approx(1.41816).epsilon(1e-5));
  CHECK(ngon_report(9).ratio == doctest::Approx(1.39366).epsilon(1e-5));
  CHECK(ngon_report(473).n_over_A == doctest::Approx(0.99975458).epsilon(1e-8));
}

TEST_CASE("ratio strictly decreases for 3 <= n <= 600") {
  const auto rows = ngon_table(2, 600);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CHECK(rows[i].n_over_A < rows[i - 1].n_over_A);
    CHECK(rows[i].A > rows[i - 1].A);
  }
}

TEST_CASE("serial and OpenMP tables agree") {
  const auto a = ngon_table(2, 700);
  const auto b = ngon_table_serial(2, 700);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].A == b[i].A);
    CHECK(a[i].ratio == b[i].ratio);
  }
}

TEST_CASE("pyramidal_ok matches the classifier") {
  std::vector<int> ns;
  for (int n = 3; n <= 20; ++n) ns.push_back(n);
  for (int n = 470; n <= 475; ++n) ns.push_back(n);
  for (int n : ns) {
    bool way3 = false;
    for (const auto& p : classify_extensions(named(NamedKind::RegularNgon, {}, 1.0, n)))
      way3 = way3 || p.way == ExtensionWay::III;
    CHECK_MESSAGE(way3 == ngon_report(n).pyramidal_ok, "n = " << n);
  }
}

TEST_CASE("asymptotic expansion") {
  const auto c100 = ngon_asymptotic_check(100);
  CHECK(c100.within_bound);
  CHECK(c100.k1_term == doctest::Approx(-std::numbers::pi / 144 / 1e4).epsilon(1e-14));
  const auto c1000 = ngon_asymptotic_check(1000);
  CHECK(c1000.within_bound);
  const double drop = c100.remainder / c1000.remainder;
  CHECK(drop > 50);
  CHECK(drop < 200);
  CHECK(std::abs(ngon_asymptotic_check(10000).remainder) < 1e-8);
  CHECK(error_code_of([] { ngon_asymptotic_check(99); }) == "invalid_argument");
}

TEST_CASE("bi-pyramids") {
  for (int n = 3; n <= 8; ++n) {
    const auto b = build_bipyramid(n);
    CHECK(b.polar_mass > 0);
    CHECK(b.lambda_equator == doctest::Approx(b.lambda_pole).epsilon(1e-13));
    CHECK(double(oracle::lambda(b.configuration)) == doctest::Approx(b.lambda_equator).epsilon(1e-13));
    CHECK(double(oracle::residual(b.configuration)) <= 1e-12);
    CHECK(b.R0 > 1);
    const auto g = oracle::center(b.configuration);
    CHECK(std::abs(double(g.x)) + std::abs(double(g.y)) + std::abs(double(g.z)) < 1e-14);
    // a central mass can be added
    CHECK(double(oracle::residual(b.configuration.with_added(2.7, Vec3::Zero()))) <= 1e-12);
  }
  // n = 3 from A(3) = 1/sqrt 3
  const double a3 = (3 / (2 * kSqrt2) - 1 / std::sqrt(3.0)) / (1 / kSqrt2 - 0.25);
  CHECK(build_bipyramid(3).polar_mass == doctest::Approx(a3).epsilon(1e-14));
  CHECK(a3 == doctest::Approx(1.0573).epsilon(1e-4));
  CHECK(error_code_of([] { build_bipyramid(9); }) == "no_positive_polar_mass");
  CHECK(error_code_of([] { build_bipyramid(2); }) == "no_positive_polar_mass");
}

TEST_CASE("mass-center pyramid apex mass") {
  for (int n = 3; n <= 12; ++n) {
    const double m = pyramid_masscenter_apex_mass(n);
    CHECK_MESSAGE((m > 0) == ngon_report(n).masscenter_pyramid_ok, "n = " << n);
    if (m <= 0) continue;
    const auto pyr = pyramid_over(named(NamedKind::RegularNgon, {}, 1.0, n), m);
    const auto sphere = fit_circumsphere(pyr.positions());
    const auto g = oracle::center(pyr);
    CHECK((Vec3(double(g.x), double(g.y), double(g.z)) - sphere.center).norm() < 1e-12);
  }
  CHECK(pyramid_masscenter_apex_mass(8) > 0);
  CHECK(pyramid_masscenter_apex_mass(9) < 0);
}

TEST_CASE("pyramids over regular polygons never have R0 = R") {
  for (int n = 3; n <= 472; n += (n < 60 ? 1 : 23)) {
    const auto pyr = pyramid_over(named(NamedKind::RegularNgon, {}, 1.0, n), 1.0);
    const double R = fit_circumsphere(pyr.positions()).radius;
    const double R0 = r0(pyr);
    CHECK(std::abs(R0 - R) > 1e-6 * R);
    CHECK((R0 > R) == (ngon_report(n).r0_eq_R_side > 0));
  }
}

TEST_CASE("named configurations") {
  CHECK(is_central(named(NamedKind::SquarePlusCenter, {}, 5.0)));
  std::mt19937_64 rng(6);
  for (double m0 : {0.01, 1.0, 30.0}) {
    CHECK(is_central(named(NamedKind::TetrahedronPlusCenter, {}, m0)));
    CHECK(is_central(named(NamedKind::NgonPlusCenter, {}, m0, 7)));
  }
  CHECK(is_central(named(NamedKind::RegularNgon, {}, 1.0, 6)));
  CHECK_FALSE(is_central(named(NamedKind::RegularNgon, {1, 2, 1, 1, 1, 1}, 1.0, 6)));
  CHECK_FALSE(is_central(named(NamedKind::TetrahedronPlusCenter, {1, 2, 3, 4}, 1.0)));
  CHECK(is_central(named(NamedKind::RegularTetrahedron, oracle::random_masses(4, rng))));
  CHECK(is_central(named(NamedKind::PyramidOver, {}, 2.0, 5)));
  const auto sqc = named(NamedKind::SquarePlusCenter, {}, 5.0);
  CHECK(sqc.mass(0) == 5.0);
  CHECK(sqc.position(0) == Vec3::Zero());
  CHECK(error_code_of([] { named(NamedKind::Square, {1, 2}); }) == "invalid_argument");
  CHECK(error_code_of([] { named_kind_from_string("octahedron"); }) == "invalid_argument");
  CHECK(error_code_of([] { named(NamedKind::PyramidOver, {}, 1.0, 500); }) == "not_pyramidal");
  for (const auto& name : named_kind_names()) CHECK_NOTHROW(named_kind_from_string(name));
}

TEST_CASE("CSV rows") {
  CHECK(ngon_csv_header().rfind("n,A,", 0) == 0);
  const auto row = ngon_csv_row(ngon_report(472));
  std::istringstream in(row);
  std::string field;
  std::getline(in, field, ',');
  CHECK(field == "472");
  std::getline(in, field, ',');
  CHECK(std::stod(field) == cosecant_sum(472));
}

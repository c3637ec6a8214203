#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "oracles.hpp"
#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/json_io.hpp"
#include "stackedcc/kernels.hpp"
#include "stackedcc/special_configs.hpp"

using namespace stackedcc;

namespace {

std::string error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

Configuration square(std::vector<double> m) {
  return named_config(NamedKind::Square, {std::move(m), 1.0, 0, 1.0});
}

}  // namespace

TEST_CASE("construction rejects bad input") {
  CHECK(error_code_of([] { Configuration({1.0}, {Vec3::Zero(), Vec3::UnitX()}); }) ==
        "invalid_configuration");
  CHECK(error_code_of([] { Configuration({1.0, -1.0}, {Vec3::Zero(), Vec3::UnitX()}); }) ==
        "invalid_configuration");
  CHECK(error_code_of([] { Configuration({1.0}, {Vec3::Zero()}); }) == "invalid_configuration");
  CHECK(error_code_of([] {
          Configuration({1.0, 1.0}, {Vec3::Zero(), Vec3(std::nan(""), 0, 0)});
        }) == "invalid_configuration");
  CHECK(error_code_of([] { Configuration({1.0, 2.0}, {Vec3::UnitX(), Vec3::UnitX()}); }) ==
        "degenerate_configuration");
}

TEST_CASE("U, I, lambda and r0 agree with the long double oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = oracle::random_configuration(3 + trial % 7, rng);
    const auto rep = cc_report(c);
    CHECK(rep.force_function == doctest::Approx(double(oracle::potential(c))).epsilon(1e-13));
    CHECK(rep.moment_of_inertia == doctest::Approx(double(oracle::inertia(c))).epsilon(1e-13));
    CHECK(rep.multiplier == doctest::Approx(double(oracle::lambda(c))).epsilon(1e-13));
    CHECK(rep.r0 == doctest::Approx(double(oracle::r0(c))).epsilon(1e-13));
    CHECK(rep.residual_norm == doctest::Approx(double(oracle::residual(c))).epsilon(1e-10));
  }
}

TEST_CASE("the two inertia forms agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = oracle::random_configuration(2 + trial % 11, rng);
    CHECK(moment_of_inertia(c) == doctest::Approx(moment_of_inertia_pairwise(c)).epsilon(1e-13));
  }
}

TEST_CASE("residual is invariant under similarity and mass scaling") {
  std::mt19937_64 rng(7);
  const auto c = oracle::random_configuration(6, rng);
  const auto base = cc_report(c);
  const Eigen::Matrix3d rot =
      Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
  for (double s : {1e-3, 0.5, 7.0, 1e4}) {
    const auto t = cc_report(c.transformed(rot, Vec3(3, -1, 2), s));
    CHECK(t.residual_norm == doctest::Approx(base.residual_norm).epsilon(1e-9));
    CHECK(t.r0 == doctest::Approx(s * base.r0).epsilon(1e-12));
    CHECK(t.multiplier == doctest::Approx(base.multiplier / (s * s * s)).epsilon(1e-12));
  }
  for (double k : {1e-2, 3.0, 1e3}) {
    const auto t = cc_report(c.with_masses_scaled(k));
    CHECK(t.residual_norm == doctest::Approx(base.residual_norm).epsilon(1e-9));
    CHECK(t.r0 == doctest::Approx(base.r0).epsilon(1e-13));
    CHECK(t.multiplier == doctest::Approx(k * base.multiplier).epsilon(1e-13));
  }
}

TEST_CASE("known central and non-central configurations") {
  const auto eq = square({1, 1, 1, 1});
  CHECK(is_central(eq));
  CHECK(cc_report(eq).residual_norm < 1e-14);

  // square(1,1,1,2): the heavy corner pulls the others off the CC
  const auto uneq = square({1, 1, 1, 2});
  CHECK_FALSE(is_central(uneq));
  CHECK(double(oracle::residual(uneq)) > 1e-3);
  CHECK(cc_report(uneq).residual_norm == doctest::Approx(double(oracle::residual(uneq))).epsilon(1e-10));

  std::mt19937_64 rng(3);
  CHECK_FALSE(is_central(oracle::random_configuration(5, rng)));

  // any two bodies form a CC
  CHECK(is_central(Configuration({1.0, 7.0}, {Vec3(1, 2, 3), Vec3(-2, 0, 5)})));
}

TEST_CASE("closed-form r0 anchors") {
  for (double edge : {0.3, 1.0, 4.0}) {
    const auto tri = named_config(NamedKind::EquilateralTriangle, {{}, 1.0, 0, edge});
    CHECK(std::abs(r0(tri) - edge) <= 1e-14 * edge);
    const auto tet = named_config(NamedKind::RegularTetrahedron, {{}, 1.0, 0, edge});
    CHECK(std::abs(r0(tet) - edge) <= 1e-14 * edge);
  }
}

TEST_CASE("tolerance controls the verdict") {
  const auto c = square({1, 1, 1, 1.0 + 1e-7});
  const double res = cc_report(c).residual_norm;
  CHECK(res > 0.0);
  CHECK(cc_report(c, 10 * res).is_central);
  CHECK_FALSE(cc_report(c, 0.1 * res).is_central);
}

TEST_CASE("serial and OpenMP kernels agree") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {3u, 50u, 300u, 700u}) {
    const auto c = oracle::random_configuration(n, rng);
    std::vector<Vec3> a(n), b(n);
    kernels::serial::accelerations(c.masses(), c.positions(), a);
    kernels::omp::accelerations(c.masses(), c.positions(), b);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, (a[i] - b[i]).norm());
      scale = std::max(scale, a[i].norm());
    }
    CHECK(worst <= 1e-12 * scale);
    const auto ps = kernels::serial::pair_sums(c.masses(), c.positions());
    const auto po = kernels::omp::pair_sums(c.masses(), c.positions());
    CHECK(po.potential == doctest::Approx(ps.potential).epsilon(1e-12));
    CHECK(po.weighted_sq == doctest::Approx(ps.weighted_sq).epsilon(1e-12));
  }
}

TEST_CASE("OpenMP kernel reports coincident bodies") {
  std::vector<double> m(400, 1.0);
  std::vector<Vec3> q;
  for (int i = 0; i < 400; ++i) q.emplace_back(i, 0, 0);
  q[300] = q[10];
  std::vector<Vec3> out(400);
  CHECK(error_code_of([&] { kernels::omp::accelerations(m, q, out); }) ==
        "degenerate_configuration");
  CHECK(error_code_of([&] { kernels::serial::accelerations(m, q, out); }) ==
        "degenerate_configuration");
}

TEST_CASE("configuration JSON round-trips bit-exactly") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto c = oracle::random_configuration(2 + trial, rng);
    const auto text = to_json(c).dump();
    const auto back = configuration_from_json(Json::parse(text));
    CHECK(back == c);
  }
  const auto planar = configuration_from_json(
      Json::parse(R"({"masses":[1,2],"positions":[[0,0],[1,0.5]]})"));
  CHECK(planar.position(1).z() == 0.0);
  CHECK(error_code_of([] { configuration_from_json(Json::parse(R"({"masses":[1]})")); }) ==
        "invalid_json");
}

TEST_CASE("without and with_added") {
  const auto c = square({1, 2, 3, 4});
  const auto d = c.without(1);
  CHECK(d.size() == 3);
  CHECK(d.mass(1) == 3.0);
  const auto e = c.with_added(9.0, Vec3::Zero());
  CHECK(e.size() == 5);
  CHECK(e.mass(0) == 9.0);
  CHECK(e.position(1) == c.position(0));
}

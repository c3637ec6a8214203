#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stackedcc/cc_report.hpp"
#include "stackedcc/collinear.hpp"
#include "stackedcc/error.hpp"

using namespace stackedcc;

namespace {

// Distinct real roots of a z^3 + b z + c on the open half-line z > 0
// (positive = true) or z < 0, counted by sign changes between the critical
// points. Independent of any closed form.
int count_half_line_roots(double a, double b, double c, bool positive) {
  auto f = [&](double z) { return a * z * z * z + b * z + c; };
  std::vector<double> cuts{0.0};
  if (-b / (3 * a) > 0) {
    const double s = std::sqrt(-b / (3 * a));
    cuts.push_back(s);
    cuts.push_back(-s);
  }
  std::vector<double> pts;
  for (double t : cuts)
    if (positive ? t > 0 : t < 0) pts.push_back(t);
  std::sort(pts.begin(), pts.end());
  // sign just inside 0, at the critical points, and at infinity
  const double big_sign = (a > 0) == positive ? 1.0 : -1.0;
  std::vector<double> signs;
  const double at0 = c != 0 ? c : (positive ? b : -b);
  if (positive) {
    signs.push_back(at0);
    for (double t : pts) signs.push_back(f(t));
    signs.push_back(big_sign);
  } else {
    signs.push_back(big_sign);
    for (double t : pts) signs.push_back(f(t));
    signs.push_back(at0);
  }
  int count = 0;
  for (std::size_t i = 0; i + 1 < signs.size(); ++i) {
    if (signs[i] == 0.0) continue;  // double root at a critical point
    std::size_t j = i + 1;
    if (signs[j] == 0.0) {
      ++count;
      continue;
    }
    if ((signs[i] > 0) != (signs[j] > 0)) ++count;
  }
  return count;
}

// Scalar collinear condition written directly from 1D accelerations.
double euler_oracle(double m1, double m2, double m0, double x1, double x2, double x0) {
  auto acc = [](double xi, double xj, double mj) {
    const double d = xj - xi;
    return mj * d / std::abs(d * d * d);
  };
  const double a0 = acc(x0, x1, m1) + acc(x0, x2, m2);
  const double a1 = acc(x1, x0, m0) + acc(x1, x2, m2);
  const double a2 = acc(x2, x0, m0) + acc(x2, x1, m1);
  return (a0 - a1) * (x2 - x1) - (a2 - a1) * (x0 - x1);
}

std::string error_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST_CASE("depressed cubic roots satisfy Vieta") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int trial = 0; trial < 2000; ++trial) {
    const double p = u(rng), q = u(rng);
    const auto r = depressed_cubic_roots(p, q);
    const auto s1 = r[0] + r[1] + r[2];
    const auto s2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2];
    const auto s3 = r[0] * r[1] * r[2];
    const double scale = 1 + std::abs(p) + std::abs(q);
    CHECK(std::abs(s1) < 1e-11 * scale);
    CHECK(std::abs(s2 - p) < 1e-11 * scale);
    CHECK(std::abs(s3 + q) < 1e-11 * scale);
    const int real_count = int(r[0].imag() == 0) + int(r[1].imag() == 0) + int(r[2].imag() == 0);
    const double disc = cubic_discriminant(1, 0, p, q);
    CHECK(real_count == (disc >= 0 ? 3 : 1));
  }
}

TEST_CASE("cubic root counts match a sign-change oracle") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-10, 10), lm(-3, 3);
  for (int trial = 0; trial < 5000; ++trial) {
    const double alpha = u(rng), beta = u(rng), m0 = std::pow(10.0, lm(rng));
    const auto prof = cubic_root_profile(alpha, beta, m0);
    CHECK(prof.negative_roots_of_minus == count_half_line_roots(-m0, alpha, beta, false));
    CHECK(prof.positive_roots_of_plus == count_half_line_roots(m0, alpha, beta, true));
    CHECK(prof.bound_holds());
    CHECK(prof.discriminant_minus ==
          doctest::Approx(4 * m0 * alpha * alpha * alpha - 27 * m0 * m0 * beta * beta));
    CHECK(prof.discriminant_plus ==
          doctest::Approx(-4 * m0 * alpha * alpha * alpha - 27 * m0 * m0 * beta * beta));
    CHECK(std::min(prof.discriminant_minus, prof.discriminant_plus) < 0);
  }
}

TEST_CASE("root-count edge cases") {
  // beta = 0: z = 0 is a root of both but not on either open half-line
  const auto a = cubic_root_profile(3.0, 0.0, 1.0);
  CHECK(a.negative_roots_of_minus == 1);  // -z^3 + 3z: z = -sqrt 3
  CHECK(a.positive_roots_of_plus == 0);
  CHECK(a.total() == 1);
  const auto b = cubic_root_profile(0.0, 0.0, 1.0);
  CHECK(b.total() == 0);
  // double root merged: -z^3 + 3z - 2 = -(z - 1)^2 (z + 2)
  const auto c = cubic_root_profile(3.0, -2.0, 1.0);
  CHECK(c.negative_roots_of_minus == 1);
}

TEST_CASE("serial and OpenMP sweeps agree") {
  const auto s = root_count_sweep_serial(20000, 99);
  const auto p = root_count_sweep(20000, 99);
  CHECK(s.samples == p.samples);
  CHECK(s.bound_violations == p.bound_violations);
  CHECK(s.discriminant_violations == p.discriminant_violations);
  CHECK(s.max_total == p.max_total);
  CHECK(s.bound_violations == 0);
  CHECK(s.discriminant_violations == 0);
  CHECK(s.max_total == 2);
}

TEST_CASE("Euler solutions: one per interval, matching the oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = oracle::random_masses(3, rng);
    const double x1 = -0.3, x2 = 1.4;
    const auto sols = euler_solve(m[0], m[1], m[2], x1, x2);
    CHECK(sols[0].x0 < x1);
    CHECK(x1 < sols[1].x0);
    CHECK(sols[1].x0 < x2);
    CHECK(x2 < sols[2].x0);
    for (const auto& s : sols) {
      CHECK(s.residual <= 1e-12);
      CHECK(double(oracle::residual(s.config)) <= 1e-12);
      CHECK(s.config.mass(0) == m[2]);
    }

    // grid sign changes of the oracle: exactly one in each interval
    const double L = x2 - x1;
    auto changes = [&](double lo, double hi) {
      int count = 0;
      const int steps = 20000;
      double prev = euler_oracle(m[0], m[1], m[2], x1, x2, lo);
      for (int k = 1; k <= steps; ++k) {
        const double f = euler_oracle(m[0], m[1], m[2], x1, x2, lo + (hi - lo) * k / steps);
        if ((f > 0) != (prev > 0)) ++count;
        prev = f;
      }
      return count;
    };
    CHECK(changes(x1 - 50 * L, x1 - 1e-6 * L) == 1);
    CHECK(changes(x1 + 1e-6 * L, x2 - 1e-6 * L) == 1);
    CHECK(changes(x2 + 1e-6 * L, x2 + 50 * L) == 1);
  }
}

TEST_CASE("equal end masses put the middle body at the midpoint") {
  for (double m0 : {0.1, 1.0, 17.0}) {
    const auto sols = euler_solve(2.5, 2.5, m0, 1.0, 3.0);
    CHECK(std::abs(sols[1].x0 - 2.0) <= 1e-13);
    // outer solutions are mirror images
    CHECK(sols[0].x0 + sols[2].x0 == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("euler_condition matches the direct oracle") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_masses(3, rng);
    const double x0 = u(rng);
    CHECK(euler_condition(m[0], m[1], m[2], 0.0, 1.0, x0) ==
          doctest::Approx(euler_oracle(m[0], m[1], m[2], 0.0, 1.0, x0)).epsilon(1e-10));
  }
}

TEST_CASE("collinear CCs cannot be extended") {
  const auto three = euler_solve(1, 2, 3, 0, 1)[1].config;
  for (double m0 : {0.1, 1.0, 10.0}) {
    const auto w = collinear_nonextension_witness(three, m0);
    CHECK(w.bounded_away);
    CHECK(w.min_max_residual > 0.01);
  }

  const std::vector<double> masses{1, 2, 3, 4}, guess{0, 1, 2, 3};
  const auto four = solve_collinear_cc(masses, guess);
  CHECK(double(oracle::residual(four)) < 1e-12);
  const auto xs = line_coordinates(four);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == doctest::Approx(3.0));
  for (double m0 : {0.5, 5.0}) CHECK(collinear_nonextension_witness(four, m0).bounded_away);

  const Configuration two({1.0, 2.0}, {Vec3::Zero(), Vec3::UnitX()});
  CHECK(error_code_of([&] { collinear_nonextension_witness(two, 1.0); }) == "extension_possible");
}

TEST_CASE("extension residuals vanish only at a CC") {
  const auto three = euler_solve(1, 1, 1, 0, 2)[1].config;
  // dropping the middle body leaves a two-body CC that does extend
  const auto pair = three.without(0);
  const double x0 = three.position(0).x();
  for (double r : extension_residuals(pair, 1.0, x0)) CHECK(std::abs(r) < 1e-10);
  // but not at an arbitrary point
  double worst = 0;
  for (double r : extension_residuals(pair, 1.0, 0.7)) worst = std::max(worst, std::abs(r));
  CHECK(worst > 1e-3);
}

TEST_CASE("non-collinear input is rejected") {
  const Configuration tri({1, 1, 1}, {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0)});
  CHECK(error_code_of([&] { line_coordinates(tri); }) == "not_collinear");
}

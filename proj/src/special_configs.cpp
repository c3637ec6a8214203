#include "stackedcc/special_configs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"

namespace stackedcc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
const double kTwoOverSqrt3 = 2.0 / std::sqrt(3.0);

int sign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

double cosecant_sum(int n) {
  if (n < 2) throw Error("invalid_argument", "n must be at least 2");
  CompensatedSum acc;
  // sin(k pi / n) = sin((n - k) pi / n); the smaller argument avoids the
  // cancellation of sin near pi
  for (int k = 1; k < n; ++k) acc.add(1.0 / std::sin(std::min(k, n - k) * kPi / n));
  return 0.25 * acc.value();
}

NgonReport ngon_report(int n) {
  NgonReport r;
  r.n = n;
  r.A = cosecant_sum(n);
  r.n_over_A = n / r.A;
  r.ratio = std::cbrt(r.n_over_A);
  r.pyramidal_margin = r.ratio - 1.0;
  r.masscenter_margin = r.ratio - kSqrt2;
  r.r0_eq_R_margin = r.ratio - kTwoOverSqrt3;
  r.pyramidal_ok = r.pyramidal_margin > 0.0;
  r.masscenter_pyramid_ok = r.masscenter_margin > 0.0;
  r.r0_eq_R_side = sign(r.r0_eq_R_margin);
  return r;
}

std::vector<NgonReport> ngon_table_serial(int from, int to) {
  if (from < 2 || to < from) throw Error("invalid_argument", "need 2 <= from <= to");
  std::vector<NgonReport> rows;
  rows.reserve(static_cast<std::size_t>(to - from + 1));
  for (int n = from; n <= to; ++n) rows.push_back(ngon_report(n));
  return rows;
}

std::vector<NgonReport> ngon_table(int from, int to) {
  if (from < 2 || to < from) throw Error("invalid_argument", "need 2 <= from <= to");
  std::vector<NgonReport> rows(static_cast<std::size_t>(to - from + 1));
  const int count = to - from + 1;
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = ngon_report(from + i);
  return rows;
}

std::string ngon_csv_header() {
  return "n,A,n_over_A,ratio,pyramidal_ok,masscenter_pyramid_ok,r0_eq_R_side";
}

std::string ngon_csv_row(const NgonReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%d,%d,%d", r.n, r.A, r.n_over_A, r.ratio,
                r.pyramidal_ok ? 1 : 0, r.masscenter_pyramid_ok ? 1 : 0, r.r0_eq_R_side);
  return buf;
}

AsymptoticCheck ngon_asymptotic_check(int n) {
  if (n < 100) throw Error("invalid_argument", "asymptotic check needs n >= 100");
  constexpr double gamma = std::numbers::egamma;
  AsymptoticCheck c;
  c.n = n;
  c.direct = cosecant_sum(n) / n;
  c.leading = (gamma + std::log(2.0 * n / kPi)) / (2.0 * kPi);
  // k = 1: (-1)(2^1 - 1) B_2^2 pi / (2 * 2! * n^2), B_2 = 1/6.
  const double b2 = 1.0 / 6.0;
  c.k1_term = -b2 * b2 * kPi / (4.0 * static_cast<double>(n) * n);
  c.remainder = c.direct - c.leading;
  c.within_bound = std::abs(c.remainder) < 2.0 * std::abs(c.k1_term);
  return c;
}

BiPyramid build_bipyramid(int n) {
  if (n < 3 || n > 8) {
    throw Error("no_positive_polar_mass",
                "no positive polar mass: the bi-pyramid needs 3 <= n <= 8, got " + std::to_string(n));
  }
  const double A = cosecant_sum(n);
  const double a = (n / (2.0 * kSqrt2) - A) / (1.0 / kSqrt2 - 0.25);

  std::vector<double> m(static_cast<std::size_t>(n), 1.0);
  std::vector<Vec3> q;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    q.emplace_back(std::cos(t), std::sin(t), 0.0);
  }
  m.push_back(a);
  q.emplace_back(0.0, 0.0, 1.0);
  m.push_back(a);
  q.emplace_back(0.0, 0.0, -1.0);

  BiPyramid b{n, a, Configuration(std::move(m), std::move(q)), A + a / kSqrt2,
              n / (2.0 * kSqrt2) + a / 4.0, 0.0};
  b.R0 = r0(b.configuration);
  return b;
}

double pyramid_masscenter_apex_mass(int n) {
  const double ratio = ngon_report(n).ratio;
  if (!(ratio > 1.0)) throw Error("not_pyramidal", "the equal-mass n-gon has r0 <= r");
  const double h = std::sqrt(ratio * ratio - 1.0);
  const double z_sphere = (h * h - 1.0) / (2.0 * h);  // equidistant from base circle and apex
  return n * z_sphere / (h - z_sphere);
}

NamedKind named_kind_from_string(std::string_view text) {
  if (text == "two_body") return NamedKind::TwoBody;
  if (text == "equilateral_triangle") return NamedKind::EquilateralTriangle;
  if (text == "square") return NamedKind::Square;
  if (text == "regular_ngon") return NamedKind::RegularNgon;
  if (text == "ngon_plus_center") return NamedKind::NgonPlusCenter;
  if (text == "square_plus_center") return NamedKind::SquarePlusCenter;
  if (text == "regular_tetrahedron") return NamedKind::RegularTetrahedron;
  if (text == "tetrahedron_plus_center") return NamedKind::TetrahedronPlusCenter;
  if (text == "pyramid_over") return NamedKind::PyramidOver;
  throw Error("invalid_argument", "unknown configuration kind '" + std::string(text) + "'");
}

std::vector<std::string> named_kind_names() {
  return {"two_body",         "equilateral_triangle", "square",
          "regular_ngon",     "ngon_plus_center",     "square_plus_center",
          "regular_tetrahedron", "tetrahedron_plus_center", "pyramid_over"};
}

namespace {

std::vector<double> outer_masses(const NamedParams& p, std::size_t count) {
  if (p.masses.empty()) return std::vector<double>(count, 1.0);
  if (p.masses.size() != count) {
    throw Error("invalid_argument", "expected " + std::to_string(count) + " masses, got " +
                                        std::to_string(p.masses.size()));
  }
  return p.masses;
}

std::vector<Vec3> ngon_points(int n, double radius) {
  std::vector<Vec3> q;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * kPi * k / n;
    q.emplace_back(radius * std::cos(t), radius * std::sin(t), 0.0);
  }
  return q;
}

std::vector<Vec3> square_points(double side) {
  const double h = 0.5 * side;
  return {Vec3(h, h, 0), Vec3(-h, h, 0), Vec3(-h, -h, 0), Vec3(h, -h, 0)};
}

std::vector<Vec3> tetrahedron_points(double edge) {
  const double s = edge / (2.0 * kSqrt2);
  return {Vec3(s, s, s), Vec3(s, -s, -s), Vec3(-s, s, -s), Vec3(-s, -s, s)};
}

int polygon_size(const NamedParams& p, int fallback) {
  const int n = p.n > 0 ? p.n : fallback;
  if (n < 2) throw Error("invalid_argument", "polygon size must be at least 2");
  return n;
}

Configuration plus_center(double m0, std::vector<double> m, std::vector<Vec3> q) {
  return Configuration(std::move(m), std::move(q)).with_added(m0, Vec3::Zero());
}

}  // namespace

Configuration named_config(NamedKind kind, const NamedParams& p) {
  if (!(p.scale > 0.0)) throw Error("invalid_argument", "scale must be positive");
  switch (kind) {
    case NamedKind::TwoBody:
      return Configuration(outer_masses(p, 2), {Vec3::Zero(), Vec3(p.scale, 0, 0)});
    case NamedKind::EquilateralTriangle:
      return Configuration(outer_masses(p, 3), ngon_points(3, p.scale / std::sqrt(3.0)));
    case NamedKind::Square:
      return Configuration(outer_masses(p, 4), square_points(p.scale));
    case NamedKind::RegularNgon: {
      const int n = polygon_size(p, 4);
      return Configuration(outer_masses(p, static_cast<std::size_t>(n)), ngon_points(n, p.scale));
    }
    case NamedKind::NgonPlusCenter: {
      const int n = polygon_size(p, 4);
      return plus_center(p.m0, outer_masses(p, static_cast<std::size_t>(n)), ngon_points(n, p.scale));
    }
    case NamedKind::SquarePlusCenter:
      return plus_center(p.m0, outer_masses(p, 4), square_points(p.scale));
    case NamedKind::RegularTetrahedron:
      return Configuration(outer_masses(p, 4), tetrahedron_points(p.scale));
    case NamedKind::TetrahedronPlusCenter:
      return plus_center(p.m0, outer_masses(p, 4), tetrahedron_points(p.scale));
    case NamedKind::PyramidOver: {
      const int n = polygon_size(p, 4);
      const Configuration base(outer_masses(p, static_cast<std::size_t>(n)), ngon_points(n, p.scale));
      return pyramid_over(base, p.m0);
    }
  }
  throw Error("invalid_argument", "unknown configuration kind");
}

Configuration pyramid_over(const Configuration& base, double m0, Apex apex) {
  for (const auto& plan : classify_extensions(base)) {
    if (plan.way == ExtensionWay::III) return build_extension(base, plan, m0, apex);
  }
  throw Error("not_pyramidal", "base admits no pyramidal extension (needs co-circular with r < r0)");
}

Json to_json(const NgonReport& r) {
  return Json{{"n", r.n},
              {"A", r.A},
              {"n_over_A", r.n_over_A},
              {"ratio", r.ratio},
              {"pyramidal_ok", r.pyramidal_ok},
              {"masscenter_pyramid_ok", r.masscenter_pyramid_ok},
              {"r0_eq_R_side", r.r0_eq_R_side},
              {"pyramidal_margin", r.pyramidal_margin},
              {"masscenter_margin", r.masscenter_margin},
              {"r0_eq_R_margin", r.r0_eq_R_margin}};
}

Json to_json(const AsymptoticCheck& c) {
  return Json{{"n", c.n},           {"direct", c.direct},       {"leading", c.leading},
              {"k1_term", c.k1_term}, {"remainder", c.remainder}, {"within_bound", c.within_bound}};
}

Json to_json(const BiPyramid& b) {
  return Json{{"n", b.n},
              {"polar_mass", b.polar_mass},
              {"configuration", to_json(b.configuration)},
              {"lambda_equator", b.lambda_equator},
              {"lambda_pole", b.lambda_pole},
              {"R0", b.R0}};
}

}  // namespace stackedcc

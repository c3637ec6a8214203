#include "stackedcc/cocircular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Geometry>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/geometry_fit.hpp"

namespace stackedcc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Configuration CocircularCC::to_configuration() const {
  std::vector<Vec3> q;
  q.reserve(angles.size());
  for (double t : angles) q.emplace_back(radius * std::cos(t), radius * std::sin(t), 0.0);
  return Configuration(masses, std::move(q));
}

double CocircularCC::r0() const { return stackedcc::r0(to_configuration()); }

double CocircularCC::chord(std::size_t i, std::size_t j) const {
  return 2.0 * radius * std::abs(std::sin(0.5 * (angles[j] - angles[i])));
}

Eigen::MatrixXd CocircularCC::s_matrix() const {
  const auto n = static_cast<Eigen::Index>(size());
  const double inv_r03 = 1.0 / std::pow(r0(), 3);
  Eigen::MatrixXd s(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      s(i, j) = (i == j) ? std::numeric_limits<double>::quiet_NaN()
                         : 1.0 / std::pow(chord(i, j), 3) - inv_r03;
    }
  }
  return s;
}

CocircularCC make_cocircular(std::vector<double> angles, std::vector<double> masses, double radius) {
  if (angles.size() != masses.size() || angles.size() < 2) {
    throw Error("invalid_argument", "need matching angle and mass lists with at least 2 bodies");
  }
  if (!(radius > 0.0)) throw Error("invalid_argument", "radius must be positive");
  if (angles[0] != 0.0) throw Error("invalid_argument", "first angle must be 0");
  for (std::size_t i = 1; i < angles.size(); ++i) {
    if (!(angles[i] > angles[i - 1])) throw Error("invalid_argument", "angles must be strictly increasing");
  }
  if (!(angles.back() < kTwoPi)) throw Error("invalid_argument", "angles must be below 2 pi");
  for (double m : masses) {
    if (!(m > 0.0)) throw Error("invalid_argument", "masses must be positive");
  }
  return CocircularCC{std::move(angles), std::move(masses), radius};
}

CocircularCC cocircular_from_configuration(const Configuration& config) {
  if (config.size() < 3) throw Error("not_cocircular", "need at least 3 bodies");
  if (affine_shape(config.positions()).dimension != AffineDimension::Plane) {
    throw Error("not_cocircular", "configuration is not planar");
  }
  const CircleFit fit = fit_circumcircle(config.positions());
  if (!fit.is_cocircular()) throw Error("not_cocircular", "configuration is not co-circular");

  const Vec3 e1 = (config.position(0) - fit.center).normalized();
  const Vec3 e2 = fit.normal.cross(e1);
  std::vector<std::pair<double, double>> items;  // (angle, mass)
  for (std::size_t i = 0; i < config.size(); ++i) {
    const Vec3 d = config.position(i) - fit.center;
    double t = std::atan2(d.dot(e2), d.dot(e1));
    if (i == 0) t = 0.0;
    if (t < 0.0) t += kTwoPi;
    items.emplace_back(t, config.mass(i));
  }
  std::sort(items.begin(), items.end());
  std::vector<double> angles, masses;
  for (const auto& [t, m] : items) {
    angles.push_back(t);
    masses.push_back(m);
  }
  return make_cocircular(std::move(angles), std::move(masses), fit.radius);
}

SideDiagonalReport side_diagonal_report(const CocircularCC& cc) {
  const std::size_t n = cc.size();
  if (n < 4) throw Error("no_diagonals", "no diagonals for n < 4");
  SideDiagonalReport rep;
  rep.n = n;
  rep.r = cc.radius;
  const Configuration config = cc.to_configuration();
  rep.r0 = stackedcc::r0(config);
  rep.is_central = is_central(config);

  rep.sides_below_r0 = true;
  for (std::size_t k = 0; k < n; ++k) {
    const double margin = rep.r0 - cc.chord(k, (k + 1) % n);
    rep.side_margins.push_back(margin);
    rep.sides_below_r0 = rep.sides_below_r0 && margin > 0.0;
  }
  rep.each_vertex_has_long_diagonal = true;
  for (std::size_t i = 0; i < n; ++i) {
    double longest = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = (j + n - i) % n;
      if (gap == 0 || gap == 1 || gap == n - 1) continue;
      const double d = cc.chord(i, j);
      longest = std::max(longest, d);
      if (j > i) {
        if (d < rep.r0) ++rep.diagonals_below_r0;
        if (d > rep.r0) ++rep.diagonals_above_r0;
      }
    }
    rep.vertex_diagonal_margins.push_back(longest - rep.r0);
    rep.each_vertex_has_long_diagonal = rep.each_vertex_has_long_diagonal && longest > rep.r0;
  }

  const Eigen::MatrixXd s = cc.s_matrix();
  bool pattern = true;
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    pattern = pattern && s(ii, static_cast<Eigen::Index>((i + 1) % n)) > 0.0 &&
              s(ii, static_cast<Eigen::Index>((i + n - 1) % n)) > 0.0;
    bool negative = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && s(ii, static_cast<Eigen::Index>(j)) < 0.0) negative = true;
    }
    pattern = pattern && negative;
  }
  rep.s_sign_pattern = pattern;
  return rep;
}

bool semicircle_check(const CocircularCC& cc) {
  const std::size_t n = cc.size();
  double widest = kTwoPi - (cc.angles.back() - cc.angles.front());
  for (std::size_t k = 1; k < n; ++k) widest = std::max(widest, cc.angles[k] - cc.angles[k - 1]);
  return widest < std::numbers::pi;
}

double radius_vs_r0(const CocircularCC& cc) { return cc.r0() - cc.radius; }

Symmetry symmetry_from_string(std::string_view text) {
  if (text == "none") return Symmetry::None;
  if (text == "trapezoid") return Symmetry::Trapezoid;
  if (text == "kite") return Symmetry::Kite;
  throw Error("invalid_argument", "unknown constraint '" + std::string(text) +
                                      "' (expected none, trapezoid or kite)");
}

Cocircular4Constraints Cocircular4Constraints::named(std::string_view name, const CocircularCC& seed) {
  Cocircular4Constraints c;
  c.symmetry = symmetry_from_string(name);
  if (c.symmetry != Symmetry::None) {
    if (seed.size() != 4) throw Error("invalid_argument", "four-body seed required");
    c.fixed_angles.emplace_back(1, seed.angles[1] - seed.angles[0]);
  }
  return c;
}

namespace {

// x = (t2, t3, t4, m2, m3, m4)
void unpack(const newton::Vector& x, std::array<double, 4>& t, std::array<double, 4>& m) {
  t = {0.0, x(0), x(1), x(2)};
  m = {1.0, x(3), x(4), x(5)};
}

}  // namespace

newton::Vector cocircular4_residual(const newton::Vector& x, const Cocircular4Constraints& cons) {
  std::array<double, 4> t{}, m{};
  unpack(x, t, m);
  std::array<Eigen::Vector2d, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = Eigen::Vector2d(std::cos(t[i]), std::sin(t[i]));

  double mt = 0.0, u = 0.0, wsq = 0.0;
  for (int i = 0; i < 4; ++i) {
    mt += m[i];
    for (int j = i + 1; j < 4; ++j) {
      const double r = (q[i] - q[j]).norm();
      u += m[i] * m[j] / r;
      wsq += m[i] * m[j] * r * r;
    }
  }
  // lambda / m = U / (m I) with I = wsq / m.
  const double lambda_over_m = u / wsq;

  std::vector<double> rows;
  rows.reserve(8 + 3 + cons.fixed_angles.size() + cons.fixed_masses.size());
  for (int j = 0; j < 4; ++j) {
    Eigen::Vector2d acc = Eigen::Vector2d::Zero();
    for (int k = 0; k < 4; ++k) {
      if (k == j) continue;
      const Eigen::Vector2d d = q[k] - q[j];
      const double r = d.norm();
      acc += m[k] * (1.0 / (r * r * r) - lambda_over_m) * d;
    }
    rows.push_back(acc.x());
    rows.push_back(acc.y());
  }
  switch (cons.symmetry) {
    case Symmetry::None: break;
    case Symmetry::Trapezoid:
      rows.push_back(t[2] + t[3] - t[1] - kTwoPi);
      rows.push_back(m[1] - m[0]);
      rows.push_back(m[3] - m[2]);
      break;
    case Symmetry::Kite:
      rows.push_back(t[2] - std::numbers::pi);
      rows.push_back(t[1] + t[3] - kTwoPi);
      rows.push_back(m[3] - m[1]);
      break;
  }
  for (const auto& [i, v] : cons.fixed_angles) rows.push_back(t[i] - v);
  for (const auto& [i, v] : cons.fixed_masses) rows.push_back(m[i] - v);
  return Eigen::Map<newton::Vector>(rows.data(), static_cast<Eigen::Index>(rows.size()));
}

newton::Vector cocircular4_unknowns(const CocircularCC& seed) {
  if (seed.size() != 4) throw Error("invalid_argument", "four-body seed required");
  newton::Vector x(6);
  for (int i = 1; i < 4; ++i) {
    x(i - 1) = seed.angles[i] - seed.angles[0];
    x(i + 2) = seed.masses[i] / seed.masses[0];
  }
  return x;
}

Solve4Result solve_cocircular_4body(const CocircularCC& seed, const Cocircular4Constraints& cons,
                                    const newton::Options& options) {
  for (const auto& [i, v] : cons.fixed_angles) {
    if (i < 1 || i > 3) throw Error("invalid_argument", "fixed angle index must be 1..3");
  }
  for (const auto& [i, v] : cons.fixed_masses) {
    if (i < 1 || i > 3) throw Error("invalid_argument", "fixed mass index must be 1..3");
  }
  const newton::Vector x0 = cocircular4_unknowns(seed);
  const newton::Residual f = [&](const newton::Vector& x) { return cocircular4_residual(x, cons); };
  const auto ordered = [](const newton::Vector& x) {
    return 0.0 < x(0) && x(0) < x(1) && x(1) < x(2) && x(2) < kTwoPi;
  };
  const auto res = newton::solve(f, x0, options, ordered);
  if (!res.converged) {
    throw Error("newton_no_convergence", "co-circular solve did not converge: " + res.failure);
  }
  for (int i = 3; i < 6; ++i) {
    if (!(res.x(i) > 0.0)) throw Error("negative_mass", "solution has a non-positive mass");
  }
  Solve4Result out;
  out.cc = make_cocircular({0.0, res.x(0), res.x(1), res.x(2)}, {1.0, res.x(3), res.x(4), res.x(5)},
                           seed.radius);
  out.iterations = res.iterations;
  out.residual_norm = res.residual_norm;
  if (!is_central(out.cc.to_configuration(), 1e-12)) {
    throw Error("newton_no_convergence", "co-circular solve ended above the CC tolerance");
  }
  return out;
}

SymmetryReport angle_symmetry(const CocircularCC& cc, double tol) {
  SymmetryReport rep;
  const std::size_t n = cc.size();
  auto wrap = [](double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
  };
  auto circ_dist = [&](double a, double b) {
    const double d = wrap(a - b);
    return std::min(d, kTwoPi - d);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double twice_axis = cc.angles[i] + cc.angles[j];
      bool mirrored = true;
      for (std::size_t k = 0; k < n && mirrored; ++k) {
        const double image = wrap(twice_axis - cc.angles[k]);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < n; ++l) best = std::min(best, circ_dist(image, cc.angles[l]));
        mirrored = best <= tol;
      }
      if (!mirrored) continue;
      // Does the axis pass through a body?
      bool through_body = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (circ_dist(2.0 * cc.angles[k], twice_axis) <= 2.0 * tol) through_body = true;
      }
      (through_body ? rep.kite : rep.trapezoid) = true;
    }
  }
  return rep;
}

Json to_json(const CocircularCC& cc) {
  const Configuration config = cc.to_configuration();
  Json j = to_json(config);
  j["angles"] = cc.angles;
  j["radius"] = cc.radius;
  j["r0"] = stackedcc::r0(config);
  return j;
}

CocircularCC cocircular_from_json(const Json& j) {
  if (j.contains("angles")) {
    const auto angles = j.at("angles").get<std::vector<double>>();
    const auto masses = j.at("masses").get<std::vector<double>>();
    const double radius = j.value("radius", 1.0);
    return make_cocircular(angles, masses, radius);
  }
  return cocircular_from_configuration(configuration_from_json(j));
}

Json to_json(const SideDiagonalReport& r) {
  return Json{{"n", r.n},
              {"r", r.r},
              {"r0", r.r0},
              {"is_central", r.is_central},
              {"side_margins", r.side_margins},
              {"vertex_diagonal_margins", r.vertex_diagonal_margins},
              {"diagonals_below_r0", r.diagonals_below_r0},
              {"diagonals_above_r0", r.diagonals_above_r0},
              {"sides_below_r0", r.sides_below_r0},
              {"each_vertex_has_long_diagonal", r.each_vertex_has_long_diagonal},
              {"s_sign_pattern", r.s_sign_pattern}};
}

}  // namespace stackedcc

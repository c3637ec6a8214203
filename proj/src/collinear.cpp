#include "stackedcc/collinear.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/geometry_fit.hpp"
#include "stackedcc/newton.hpp"

namespace stackedcc {

using cplx = std::complex<double>;

std::array<cplx, 3> depressed_cubic_roots(double p, double q) {
  std::array<double, 3> real{};
  int nreal = 0;
  if (p == 0.0) {
    real[0] = std::cbrt(-q);
    nreal = (q == 0.0) ? 3 : 1;
    if (nreal == 3) real[1] = real[2] = 0.0;
  } else {
    const double disc = -(4.0 * p * p * p + 27.0 * q * q);
    if (disc > 0.0) {
      // Three distinct real roots (p < 0), trigonometric form.
      const double amp = 2.0 * std::sqrt(-p / 3.0);
      const double arg = std::clamp(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p), -1.0, 1.0);
      const double phi = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k) real[k] = amp * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0);
      nreal = 3;
    } else if (disc == 0.0) {
      real[0] = 3.0 * q / p;
      real[1] = real[2] = -1.5 * q / p;
      nreal = 3;
    } else if (p < 0.0) {
      const double s = std::sqrt(-p / 3.0);
      const double arg = -1.5 * std::abs(q) / p / s;  // = (3|q| / (2|p|)) sqrt(3/|p|) >= 1
      real[0] = -2.0 * std::copysign(1.0, q) * s * std::cosh(std::acosh(std::max(arg, 1.0)) / 3.0);
      nreal = 1;
    } else {
      const double s = std::sqrt(p / 3.0);
      real[0] = -2.0 * s * std::sinh(std::asinh(1.5 * q / p / s) / 3.0);
      nreal = 1;
    }
  }

  // One Newton polish on each real root.
  for (int k = 0; k < nreal; ++k) {
    const double z = real[k];
    const double f = (z * z + p) * z + q;
    const double df = 3.0 * z * z + p;
    if (df != 0.0) {
      const double zn = z - f / df;
      const double fn = (zn * zn + p) * zn + q;
      if (std::abs(fn) < std::abs(f)) real[k] = zn;
    }
  }
  std::sort(real.begin(), real.begin() + nreal);

  std::array<cplx, 3> roots{};
  for (int k = 0; k < nreal; ++k) roots[k] = cplx(real[k], 0.0);
  if (nreal == 1) {
    // z^3 + p z + q = (z - z1)(z^2 + z1 z + z1^2 + p)
    const double z1 = real[0];
    const double im = std::sqrt(std::max(0.0, 0.75 * z1 * z1 + p));
    roots[1] = cplx(-0.5 * z1, im);
    roots[2] = cplx(-0.5 * z1, -im);
  }
  return roots;
}

double cubic_discriminant(double a, double b, double c, double d) {
  return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c -
         27.0 * a * a * d * d;
}

namespace {

std::vector<double> distinct_real(const std::array<cplx, 3>& roots) {
  std::vector<double> out;
  for (const auto& z : roots) {
    if (z.imag() == 0.0) out.push_back(z.real());
  }
  std::sort(out.begin(), out.end());
  std::vector<double> merged;
  for (double z : out) {
    if (merged.empty() || std::abs(z - merged.back()) > 1e-9 * (1.0 + std::abs(z))) {
      merged.push_back(z);
    }
  }
  return merged;
}

}  // namespace

CubicRootProfile cubic_root_profile(double alpha, double beta, double m0) {
  if (!(m0 > 0.0)) throw Error("invalid_argument", "m0 must be positive");
  CubicRootProfile prof;
  prof.alpha = alpha;
  prof.beta = beta;
  prof.m0 = m0;
  prof.discriminant_minus = cubic_discriminant(-m0, 0.0, alpha, beta);
  prof.discriminant_plus = cubic_discriminant(m0, 0.0, alpha, beta);
  // -m0 z^3 + alpha z + beta = 0  <=>  z^3 - (alpha/m0) z - beta/m0 = 0
  prof.roots_minus = depressed_cubic_roots(-alpha / m0, -beta / m0);
  prof.roots_plus = depressed_cubic_roots(alpha / m0, beta / m0);
  for (double z : distinct_real(prof.roots_minus)) {
    if (z < 0.0) ++prof.negative_roots_of_minus;
  }
  for (double z : distinct_real(prof.roots_plus)) {
    if (z > 0.0) ++prof.positive_roots_of_plus;
  }
  return prof;
}

namespace {

struct SweepSamples {
  std::vector<double> alpha, beta, m0;
};

SweepSamples draw_samples(std::int64_t samples, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-scale, scale);
  std::uniform_real_distribution<double> logm(-3.0, 3.0);
  SweepSamples s;
  s.alpha.resize(samples);
  s.beta.resize(samples);
  s.m0.resize(samples);
  for (std::int64_t i = 0; i < samples; ++i) {
    s.alpha[i] = coef(rng);
    s.beta[i] = coef(rng);
    s.m0[i] = std::pow(10.0, logm(rng));
  }
  return s;
}

bool discriminant_ok(const CubicRootProfile& p) {
  if (p.alpha == 0.0 || p.beta == 0.0) return true;
  return std::min(p.discriminant_minus, p.discriminant_plus) < 0.0;
}

}  // namespace

RootSweepSummary root_count_sweep_serial(std::int64_t samples, std::uint64_t seed, double scale) {
  const SweepSamples s = draw_samples(samples, seed, scale);
  RootSweepSummary sum;
  sum.samples = samples;
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto p = cubic_root_profile(s.alpha[i], s.beta[i], s.m0[i]);
    if (!p.bound_holds()) ++sum.bound_violations;
    if (!discriminant_ok(p)) ++sum.discriminant_violations;
    sum.max_total = std::max(sum.max_total, p.total());
  }
  return sum;
}

RootSweepSummary root_count_sweep(std::int64_t samples, std::uint64_t seed, double scale) {
  const SweepSamples s = draw_samples(samples, seed, scale);
  std::int64_t bound_violations = 0;
  std::int64_t disc_violations = 0;
  int max_total = 0;
#pragma omp parallel for schedule(static) reduction(+ : bound_violations, disc_violations) \
    reduction(max : max_total)
  for (std::int64_t i = 0; i < samples; ++i) {
    const auto p = cubic_root_profile(s.alpha[i], s.beta[i], s.m0[i]);
    if (!p.bound_holds()) ++bound_violations;
    if (!discriminant_ok(p)) ++disc_violations;
    max_total = std::max(max_total, p.total());
  }
  return {samples, bound_violations, disc_violations, max_total};
}

const char* to_string(EulerInterval interval) {
  switch (interval) {
    case EulerInterval::Left: return "left";
    case EulerInterval::Middle: return "middle";
    case EulerInterval::Right: return "right";
  }
  return "?";
}

double euler_condition(double m1, double m2, double m0, double x1, double x2, double x0) {
  auto pull = [](double m, double from, double to) {
    const double d = to - from;
    return m * d / (std::abs(d) * d * d);
  };
  const double a0 = pull(m1, x0, x1) + pull(m2, x0, x2);
  const double a1 = pull(m0, x1, x0) + pull(m2, x1, x2);
  const double a2 = pull(m0, x2, x0) + pull(m1, x2, x1);
  return (a0 - a1) * (x2 - x1) - (a2 - a1) * (x0 - x1);
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double polish(const std::function<double(double)>& f, double x, double lo, double hi, double len) {
  const double h = 1e-7 * len;
  const double fx = f(x);
  const double df = (f(x + h) - f(x - h)) / (2.0 * h);
  if (df == 0.0 || !std::isfinite(df)) return x;
  const double xn = x - fx / df;
  if (xn > lo && xn < hi && std::abs(f(xn)) < std::abs(fx)) return xn;
  return x;
}

}  // namespace

std::array<EulerSolution, 3> euler_solve(double m1, double m2, double m0, double x1, double x2) {
  if (!(m1 > 0.0 && m2 > 0.0 && m0 > 0.0)) throw Error("invalid_argument", "masses must be positive");
  if (!(x1 < x2)) throw Error("invalid_argument", "euler_solve needs x1 < x2");
  const double len = x2 - x1;
  const double gap = 1e-12 * len;
  const std::function<double(double)> f = [&](double x0) {
    return euler_condition(m1, m2, m0, x1, x2, x0);
  };

  auto outward = [&](double near, double dir) {
    const bool sign_near = f(near) > 0.0;
    double far = near + dir * len;
    for (int k = 0; k < 80 && (f(far) > 0.0) == sign_near; ++k) far = near + dir * len * std::ldexp(1.0, k + 1);
    return far;
  };

  std::array<double, 3> lo{}, hi{};
  lo[0] = outward(x1 - gap, -1.0);
  hi[0] = x1 - gap;
  lo[1] = x1 + gap;
  hi[1] = x2 - gap;
  lo[2] = x2 + gap;
  hi[2] = outward(x2 + gap, +1.0);

  const EulerInterval labels[3] = {EulerInterval::Left, EulerInterval::Middle, EulerInterval::Right};
  auto solve_one = [&](int k) {
    if ((f(lo[k]) > 0.0) == (f(hi[k]) > 0.0)) {
      throw Error("no_sign_change", std::string("no sign change on the ") + to_string(labels[k]) +
                                        " interval");
    }
    double x0 = bisect(f, lo[k], hi[k]);
    x0 = polish(f, x0, lo[k], hi[k], len);
    Configuration cfg({m0, m1, m2}, {Vec3(x0, 0, 0), Vec3(x1, 0, 0), Vec3(x2, 0, 0)});
    const double res = cc_report(cfg).residual_norm;
    return EulerSolution{labels[k], x0, std::move(cfg), res};
  };
  return {solve_one(0), solve_one(1), solve_one(2)};
}

std::vector<double> line_coordinates(const Configuration& config) {
  const auto shape = affine_shape(config.positions());
  if (shape.dimension != AffineDimension::Line) {
    throw Error("not_collinear", "configuration is not collinear");
  }
  const Vec3& origin = config.position(0);
  const Vec3 dir = (config.positions().back() - origin).dot(shape.direction) < 0.0 ? Vec3(-shape.direction)
                                                                                 : shape.direction;
  std::vector<double> x;
  x.reserve(config.size());
  for (const auto& q : config.positions()) x.push_back((q - origin).dot(dir));
  return x;
}

namespace {

struct LineSums {
  double m = 0.0, c = 0.0, lambda = 0.0;
};

LineSums line_sums(std::span<const double> m, std::span<const double> x) {
  LineSums s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    s.m += m[i];
    s.c += m[i] * x[i];
  }
  s.c /= s.m;
  double u = 0.0, inertia = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    inertia += m[i] * (x[i] - s.c) * (x[i] - s.c);
    for (std::size_t j = i + 1; j < m.size(); ++j) u += m[i] * m[j] / std::abs(x[j] - x[i]);
  }
  s.lambda = u / inertia;
  return s;
}

std::vector<double> residuals_1d(std::span<const double> m, std::span<const double> x,
                                 const LineSums& sub, double m0, double x0) {
  std::vector<double> mb(m.begin(), m.end());
  std::vector<double> xb(x.begin(), x.end());
  mb.push_back(m0);
  xb.push_back(x0);
  const LineSums ext = line_sums(mb, xb);
  std::vector<double> res(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double y = x[i] - x0;
    res[i] = (sub.lambda - ext.lambda) * y + m0 * y / (std::abs(y) * y * y) +
             (sub.lambda - ext.lambda * sub.m / ext.m) * (x0 - sub.c);
  }
  return res;
}

}  // namespace

std::vector<double> extension_residuals(const Configuration& config, double m0, double x0) {
  const auto x = line_coordinates(config);
  const LineSums sub = line_sums(config.masses(), x);
  for (double xi : x) {
    if (xi == x0) throw Error("degenerate_configuration", "x0 coincides with a body");
  }
  return residuals_1d(config.masses(), x, sub, m0, x0);
}

NonextensionWitness collinear_nonextension_witness(const Configuration& config, double m0,
                                                   std::size_t grid_points) {
  if (config.size() == 2) {
    throw Error("extension_possible", "extension possible, use euler_solve");
  }
  if (!(m0 > 0.0)) throw Error("invalid_argument", "m0 must be positive");
  if (grid_points < 2) throw Error("invalid_argument", "grid needs at least 2 points");
  const auto x = line_coordinates(config);
  if (!is_central(config)) {
    throw Error("sub_configuration_not_central", "sub-configuration not central");
  }
  const LineSums sub = line_sums(config.masses(), x);
  const auto [xmin_it, xmax_it] = std::minmax_element(x.begin(), x.end());
  const double span = *xmax_it - *xmin_it;
  const double lo = *xmin_it - 2.0 * span;
  const double hi = *xmax_it + 2.0 * span;

  NonextensionWitness w;
  w.m0 = m0;
  w.grid_points = grid_points;
  w.lambda = sub.lambda;
  for (double xi : x) w.length_scale = std::max(w.length_scale, std::abs(xi - sub.c));
  const double norm = w.lambda * w.length_scale;

  // Cell midpoints so that no grid point lands on a body for symmetric input.
  std::vector<double> worst(grid_points);
  const auto count = static_cast<long>(grid_points);
  const std::span<const double> masses = config.masses();
#pragma omp parallel for schedule(static)
  for (long g = 0; g < count; ++g) {
    const double x0 = lo + (hi - lo) * (static_cast<double>(g) + 0.5) / static_cast<double>(count);
    double mx = 0.0;
    bool hit = false;
    for (double xi : x) hit = hit || xi == x0;
    if (!hit) {
      for (double r : residuals_1d(masses, x, sub, m0, x0)) mx = std::max(mx, std::abs(r));
    } else {
      mx = std::numeric_limits<double>::infinity();
    }
    worst[g] = mx / norm;
  }
  const auto it = std::min_element(worst.begin(), worst.end());
  w.min_max_residual = *it;
  w.argmin_x0 = lo + (hi - lo) * (static_cast<double>(it - worst.begin()) + 0.5) / static_cast<double>(count);
  w.bounded_away = w.min_max_residual > 0.01;
  return w;
}

Configuration solve_collinear_cc(std::span<const double> masses, std::span<const double> guess) {
  const std::size_t n = masses.size();
  if (n < 3 || guess.size() != n) {
    throw Error("invalid_argument", "need at least 3 masses and a matching guess");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(guess[i] > guess[i - 1])) throw Error("invalid_argument", "guess must be strictly increasing");
  }
  const double first = guess.front();
  const double last = guess.back();
  const std::vector<double> m(masses.begin(), masses.end());

  auto unpack = [&](const newton::Vector& v) {
    std::vector<double> x(n);
    x[0] = first;
    x[n - 1] = last;
    for (std::size_t i = 1; i + 1 < n; ++i) x[i] = v(static_cast<Eigen::Index>(i - 1));
    return x;
  };
  // Unknowns: interior positions and lambda. Body 0's equation is implied
  // by momentum balance and is dropped.
  const newton::Residual f = [&](const newton::Vector& v) {
    const auto x = unpack(v);
    const double lambda = v(static_cast<Eigen::Index>(n - 2));
    double c = 0.0, mt = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      c += m[i] * x[i];
      mt += m[i];
    }
    c /= mt;
    newton::Vector r(static_cast<Eigen::Index>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      double a = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double d = x[j] - x[i];
        a += m[j] * d / (std::abs(d) * d * d);
      }
      r(static_cast<Eigen::Index>(i - 1)) = a + lambda * (x[i] - c);
    }
    return r;
  };
  const auto ordered = [&](const newton::Vector& v) {
    const auto x = unpack(v);
    for (std::size_t i = 1; i < n; ++i) {
      if (!(x[i] > x[i - 1])) return false;
    }
    return true;
  };

  newton::Vector v0(static_cast<Eigen::Index>(n - 1));
  for (std::size_t i = 1; i + 1 < n; ++i) v0(static_cast<Eigen::Index>(i - 1)) = guess[i];
  {
    std::vector<Vec3> q;
    for (double xi : guess) q.emplace_back(xi, 0.0, 0.0);
    const Configuration g(m, q);
    v0(static_cast<Eigen::Index>(n - 2)) = force_function(g) / moment_of_inertia(g);
  }
  newton::Options opt;
  opt.residual_tol = 1e-14 * (last - first) * v0(static_cast<Eigen::Index>(n - 2));
  const auto res = newton::solve(f, v0, opt, ordered);
  const auto x = unpack(res.x);
  std::vector<Vec3> q;
  for (double xi : x) q.emplace_back(xi, 0.0, 0.0);
  Configuration out(m, q);
  if (!is_central(out, 1e-12)) {
    throw Error("newton_no_convergence", "collinear CC solve did not converge: " + res.failure);
  }
  return out;
}

Json to_json(const CubicRootProfile& p) {
  auto roots = [](const std::array<cplx, 3>& r) {
    Json a = Json::array();
    for (const auto& z : r) a.push_back(Json::array({z.real(), z.imag()}));
    return a;
  };
  return Json{{"alpha", p.alpha},
              {"beta", p.beta},
              {"m0", p.m0},
              {"discriminant_minus", p.discriminant_minus},
              {"discriminant_plus", p.discriminant_plus},
              {"roots_minus", roots(p.roots_minus)},
              {"roots_plus", roots(p.roots_plus)},
              {"negative_roots_of_minus", p.negative_roots_of_minus},
              {"positive_roots_of_plus", p.positive_roots_of_plus},
              {"bound_holds", p.bound_holds()}};
}

Json to_json(const NonextensionWitness& w) {
  return Json{{"m0", w.m0},
              {"grid_points", w.grid_points},
              {"lambda", w.lambda},
              {"length_scale", w.length_scale},
              {"min_max_residual", w.min_max_residual},
              {"argmin_x0", w.argmin_x0},
              {"bounded_away", w.bounded_away}};
}

}  // namespace stackedcc

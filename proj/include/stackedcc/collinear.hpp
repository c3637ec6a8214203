#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "stackedcc/configuration.hpp"
#include "stackedcc/json_io.hpp"

namespace stackedcc {

/// Roots of z^3 + p z + q = 0 in closed form. Real roots come first, in
/// ascending order, with exactly zero imaginary part.
std::array<std::complex<double>, 3> depressed_cubic_roots(double p, double q);

/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2 for a z^3 + b z^2 + c z + d.
double cubic_discriminant(double a, double b, double c, double d);

/// Root data behind the collinear non-extension bound for the pair
///   minus: -m0 z^3 + alpha z + beta = 0   (negative roots counted)
///   plus:   m0 z^3 + alpha z + beta = 0   (positive roots counted)
struct CubicRootProfile {
  double alpha = 0.0;
  double beta = 0.0;
  double m0 = 0.0;
  double discriminant_minus = 0.0;  // 4 m0 alpha^3 - 27 m0^2 beta^2
  double discriminant_plus = 0.0;   // -4 m0 alpha^3 - 27 m0^2 beta^2
  std::array<std::complex<double>, 3> roots_minus{};
  std::array<std::complex<double>, 3> roots_plus{};
  int negative_roots_of_minus = 0;  // distinct
  int positive_roots_of_plus = 0;   // distinct

  int total() const { return negative_roots_of_minus + positive_roots_of_plus; }
  bool bound_holds() const { return total() <= 2; }
};

/// Real roots closer than 1e-9 (1 + |root|) are merged before counting.
CubicRootProfile cubic_root_profile(double alpha, double beta, double m0);

struct RootSweepSummary {
  std::int64_t samples = 0;
  std::int64_t bound_violations = 0;
  std::int64_t discriminant_violations = 0;  // alpha beta != 0 but min(D1, D2) >= 0
  int max_total = 0;
};

/// Random (alpha, beta, m0) sweep: alpha, beta uniform in [-scale, scale],
/// m0 log-uniform in [1e-3, 1e3]. Deterministic in `seed`. The OpenMP and
/// serial versions return identical summaries.
RootSweepSummary root_count_sweep(std::int64_t samples, std::uint64_t seed, double scale = 10.0);
RootSweepSummary root_count_sweep_serial(std::int64_t samples, std::uint64_t seed,
                                         double scale = 10.0);

enum class EulerInterval { Left, Middle, Right };
const char* to_string(EulerInterval interval);

struct EulerSolution {
  EulerInterval interval = EulerInterval::Middle;
  double x0 = 0.0;
  Configuration config;  // (m0, m1, m2) at (x0, x1, x2) on the x-axis
  double residual = 0.0;  // normalized CC residual
};

/// Scalar collinear CC condition for m0 at x0 next to m1 at x1 and m2 at x2:
///   (a0 - a1)(x2 - x1) - (a2 - a1)(x0 - x1),
/// zero exactly at the collinear central configurations.
double euler_condition(double m1, double m2, double m0, double x1, double x2, double x0);

/// The three Euler configurations, one with m0 in each of (-inf, x1),
/// (x1, x2), (x2, inf): bisection on a sign change, then one Newton polish.
std::array<EulerSolution, 3> euler_solve(double m1, double m2, double m0, double x1, double x2);

/// Coordinates of a collinear configuration along its line, measured from
/// body 0 and oriented so the last body sits at a positive coordinate.
std::vector<double> line_coordinates(const Configuration& config);

/// Per-body residuals of the reduced extension equations
///   (lambda - lambda_bar)(x_i - x0) + m0 (x_i - x0) / |x_i - x0|^3
///     + (lambda - lambda_bar m / m_bar)(x0 - c)
/// for adding m0 at line coordinate x0; all zero iff the extension is central.
std::vector<double> extension_residuals(const Configuration& config, double m0, double x0);

struct NonextensionWitness {
  double m0 = 0.0;
  std::size_t grid_points = 0;
  double lambda = 0.0;
  double length_scale = 0.0;       // max |x_i - c|
  double min_max_residual = 0.0;   // min over grid of max_i |residual_i|, over lambda * length_scale
  double argmin_x0 = 0.0;
  bool bounded_away = false;       // min_max_residual > 0.01
};

/// Grid sweep of x0 over [min x - 2 span, max x + 2 span] for a collinear
/// central configuration with n >= 3. n == 2 throws "extension_possible".
NonextensionWitness collinear_nonextension_witness(const Configuration& config, double m0,
                                                   std::size_t grid_points = 1000);

/// Newton solve for a collinear CC with the given masses, keeping the end
/// bodies of `guess` fixed and the ordering of the guess.
Configuration solve_collinear_cc(std::span<const double> masses, std::span<const double> guess);

Json to_json(const CubicRootProfile& profile);
Json to_json(const NonextensionWitness& witness);

}  // namespace stackedcc

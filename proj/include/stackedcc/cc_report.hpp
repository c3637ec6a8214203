#pragma once

#include <vector>

#include "stackedcc/configuration.hpp"

namespace stackedcc {

/// Default threshold on the dimensionless CC residual.
inline constexpr double kDefaultCCTolerance = 1e-10;

/// Scalar summary of a configuration with respect to the central
/// configuration equations
///   sum_{j != i} m_j (q_j - q_i) / r_ij^3 + lambda (q_i - c) = 0.
struct CCReport {
  double total_mass = 0.0;
  Vec3 center_of_mass = Vec3::Zero();
  double force_function = 0.0;     // U
  double moment_of_inertia = 0.0;  // I
  double multiplier = 0.0;         // lambda = U / I
  double r0 = 0.0;                 // (m / lambda)^(1/3)
  double residual_norm = 0.0;
  double tolerance = kDefaultCCTolerance;
  bool is_central = false;
};

Vec3 center_of_mass(const Configuration& config);

/// U = sum_{i<j} m_i m_j / r_ij.
double force_function(const Configuration& config);

/// I in mass-center form, sum_i m_i |q_i - c|^2.
double moment_of_inertia(const Configuration& config);

/// I in pairwise form, sum_{i<j} m_i m_j r_ij^2 / m. Equal to
/// moment_of_inertia() up to rounding; kept as an independent route.
double moment_of_inertia_pairwise(const Configuration& config);

/// (m I / U)^(1/3); defined for any configuration, central or not.
double r0(const Configuration& config);

/// Per-body residual vectors of the CC equations with lambda = U / I.
std::vector<Vec3> cc_residuals(const Configuration& config);

/// Residual is || residuals || / (lambda * max_i |q_i - c| * sqrt(n)), which is
/// invariant under similarity transforms and mass scaling.
CCReport cc_report(const Configuration& config, double tolerance = kDefaultCCTolerance);

inline bool is_central(const Configuration& config, double tolerance = kDefaultCCTolerance) {
  return cc_report(config, tolerance).is_central;
}

}  // namespace stackedcc

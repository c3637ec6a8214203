#include "stackedcc/cc_report.hpp"

#include <algorithm>
#include <cmath>

#include "stackedcc/error.hpp"
#include "stackedcc/kernels.hpp"

namespace stackedcc {

Vec3 center_of_mass(const Configuration& config) {
  Vec3 acc = Vec3::Zero();
  for (std::size_t i = 0; i < config.size(); ++i) acc += config.mass(i) * config.position(i);
  return acc / config.total_mass();
}

double force_function(const Configuration& config) {
  return kernels::pair_sums(config.masses(), config.positions()).potential;
}

double moment_of_inertia(const Configuration& config) {
  const Vec3 c = center_of_mass(config);
  double inertia = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    inertia += config.mass(i) * (config.position(i) - c).squaredNorm();
  }
  return inertia;
}

double moment_of_inertia_pairwise(const Configuration& config) {
  return kernels::pair_sums(config.masses(), config.positions()).weighted_sq /
         config.total_mass();
}

double r0(const Configuration& config) {
  return std::cbrt(config.total_mass() * moment_of_inertia(config) / force_function(config));
}

namespace {

std::vector<Vec3> residuals_with(const Configuration& config, const Vec3& c, double lambda) {
  std::vector<Vec3> acc(config.size());
  kernels::accelerations(config.masses(), config.positions(), acc);
  for (std::size_t i = 0; i < config.size(); ++i) acc[i] += lambda * (config.position(i) - c);
  return acc;
}

}  // namespace

std::vector<Vec3> cc_residuals(const Configuration& config) {
  const double lambda = force_function(config) / moment_of_inertia(config);
  return residuals_with(config, center_of_mass(config), lambda);
}

CCReport cc_report(const Configuration& config, double tolerance) {
  if (!(tolerance > 0.0)) throw Error("invalid_argument", "tolerance must be positive");

  CCReport rep;
  rep.tolerance = tolerance;
  rep.total_mass = config.total_mass();
  rep.center_of_mass = center_of_mass(config);
  rep.force_function = force_function(config);
  rep.moment_of_inertia = moment_of_inertia(config);
  rep.multiplier = rep.force_function / rep.moment_of_inertia;
  rep.r0 = std::cbrt(rep.total_mass / rep.multiplier);

  double spread = 0.0;
  for (const auto& q : config.positions()) {
    spread = std::max(spread, (q - rep.center_of_mass).norm());
  }
  double sq = 0.0;
  for (const auto& v : residuals_with(config, rep.center_of_mass, rep.multiplier)) {
    sq += v.squaredNorm();
  }
  const double scale = rep.multiplier * spread * std::sqrt(static_cast<double>(config.size()));
  rep.residual_norm = std::sqrt(sq) / scale;
  rep.is_central = rep.residual_norm <= tolerance;
  return rep;
}

}  // namespace stackedcc

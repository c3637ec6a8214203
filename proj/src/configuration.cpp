#include "stackedcc/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stackedcc/error.hpp"

namespace stackedcc {

Configuration::Configuration(std::vector<double> masses, std::vector<Vec3> positions)
    : masses_(std::move(masses)), positions_(std::move(positions)) {
  if (masses_.size() != positions_.size()) {
    throw Error("invalid_configuration", "mass and position counts differ");
  }
  if (masses_.size() < 2) {
    throw Error("invalid_configuration", "a configuration needs at least two bodies");
  }
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!(masses_[i] > 0.0) || !std::isfinite(masses_[i])) {
      throw Error("invalid_configuration",
                  "mass " + std::to_string(i) + " is not a positive finite number");
    }
    if (!positions_[i].allFinite()) {
      throw Error("invalid_configuration",
                  "position " + std::to_string(i) + " is not finite");
    }
  }
  if (!(min_pairwise_distance(positions_) > 0.0)) {
    throw Error("degenerate_configuration", "degenerate configuration: coincident bodies");
  }
}

double Configuration::total_mass() const noexcept {
  double m = 0.0;
  for (double mi : masses_) m += mi;
  return m;
}

Configuration Configuration::without(std::size_t index) const {
  std::vector<double> m;
  std::vector<Vec3> q;
  m.reserve(size() - 1);
  q.reserve(size() - 1);
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == index) continue;
    m.push_back(masses_[i]);
    q.push_back(positions_[i]);
  }
  return Configuration(std::move(m), std::move(q));
}

Configuration Configuration::with_added(double m0, const Vec3& q0) const {
  std::vector<double> m{m0};
  std::vector<Vec3> q{q0};
  m.insert(m.end(), masses_.begin(), masses_.end());
  q.insert(q.end(), positions_.begin(), positions_.end());
  return Configuration(std::move(m), std::move(q));
}

Configuration Configuration::transformed(const Eigen::Matrix3d& rotation, const Vec3& shift,
                                         double scale) const {
  std::vector<Vec3> q;
  q.reserve(size());
  for (const auto& p : positions_) q.push_back(scale * (rotation * p) + shift);
  return Configuration(masses_, std::move(q));
}

Configuration Configuration::with_masses_scaled(double factor) const {
  std::vector<double> m = masses_;
  for (double& mi : m) mi *= factor;
  return Configuration(std::move(m), positions_);
}

bool operator==(const Configuration& a, const Configuration& b) {
  if (a.masses_ != b.masses_ || a.positions_.size() != b.positions_.size()) return false;
  for (std::size_t i = 0; i < a.positions_.size(); ++i) {
    if (a.positions_[i] != b.positions_[i]) return false;
  }
  return true;
}

double min_pairwise_distance(std::span<const Vec3> positions) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      best = std::min(best, (positions[i] - positions[j]).norm());
    }
  }
  return best;
}

}  // namespace stackedcc

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace stackedcc {

using Vec3 = Eigen::Vector3d;

/// Point masses in R^3. Planar configurations carry z = 0; planarity is a
/// detected property, not a separate type.
///
/// When a configuration is built by extending a smaller one, the added body
/// sits at index 0 and the original bodies follow in their original order, so
/// dropping index 0 recovers the sub-configuration.
///
/// Invariants (checked on construction): n >= 2, equal counts, every mass
/// strictly positive and finite, positions finite and pairwise distinct.
class Configuration {
 public:
  Configuration(std::vector<double> masses, std::vector<Vec3> positions);

  std::size_t size() const noexcept { return masses_.size(); }
  std::span<const double> masses() const noexcept { return masses_; }
  std::span<const Vec3> positions() const noexcept { return positions_; }
  double mass(std::size_t i) const { return masses_[i]; }
  const Vec3& position(std::size_t i) const { return positions_[i]; }

  double total_mass() const noexcept;

  /// Copy without body `index`.
  Configuration without(std::size_t index) const;

  /// Copy with a new body inserted at index 0.
  Configuration with_added(double m0, const Vec3& q0) const;

  /// Rigid motion / similarity helpers used by the invariance tests.
  Configuration transformed(const Eigen::Matrix3d& rotation, const Vec3& shift,
                            double scale = 1.0) const;
  Configuration with_masses_scaled(double factor) const;

  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  std::vector<double> masses_;
  std::vector<Vec3> positions_;
};

/// Smallest pairwise distance; O(n^2).
double min_pairwise_distance(std::span<const Vec3> positions);

}  // namespace stackedcc

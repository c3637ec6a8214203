#pragma once

#include <span>

#include "stackedcc/configuration.hpp"

namespace stackedcc {

/// Relative deviation below which points count as lying on the fitted
/// circle or sphere.
inline constexpr double kCocircularRelTol = 1e-9;

/// Relative singular-value threshold for collinear / coplanar detection.
inline constexpr double kAffineRelTol = 1e-10;

struct CircleFit {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  Vec3 normal = Vec3::UnitZ();
  /// Largest distance from an input point to the circle (in-plane radial
  /// error combined with off-plane height).
  double max_deviation = 0.0;

  bool is_cocircular() const { return max_deviation <= kCocircularRelTol * radius; }
};

struct SphereFit {
  Vec3 center = Vec3::Zero();
  double radius = 0.0;
  double max_deviation = 0.0;  // max | |p - center| - radius |
  /// Points are coplanar and co-circular; such a set is not co-spherical.
  bool is_planar = false;

  bool is_cospherical() const {
    return !is_planar && max_deviation <= kCocircularRelTol * radius;
  }
};

enum class AffineDimension { Point, Line, Plane, Space };

struct AffineShape {
  AffineDimension dimension = AffineDimension::Space;
  Vec3 centroid = Vec3::Zero();
  Vec3 direction = Vec3::UnitX();  // principal axis; the line for Line
  Vec3 normal = Vec3::UnitZ();     // least-spread axis; the plane normal for Plane
};

/// Dimension of the affine hull from the singular values of the centered
/// point cloud, relative to the largest one.
AffineShape affine_shape(std::span<const Vec3> points, double rel_tol = kAffineRelTol);

/// Exact circle through the first three non-collinear points, with the
/// deviation of the remaining points reported. Throws "no_circumcircle" when
/// all points are collinear.
CircleFit fit_circumcircle(std::span<const Vec3> points);

/// Exact sphere through the first four affinely independent points. Coplanar
/// co-circular input yields the circle's sphere with is_planar set; coplanar
/// input that is not co-circular throws "no_circumsphere".
SphereFit fit_circumsphere(std::span<const Vec3> points);

}  // namespace stackedcc

#include "stackedcc/geometry_fit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "stackedcc/error.hpp"

namespace stackedcc {

namespace {

constexpr double kSeedRelTol = 1e-10;

std::optional<std::size_t> first_off_line(std::span<const Vec3> p, std::size_t i0,
                                          std::size_t i1) {
  const Vec3 a = p[i1] - p[i0];
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k == i0 || k == i1) continue;
    const Vec3 b = p[k] - p[i0];
    if (a.cross(b).norm() > kSeedRelTol * a.norm() * b.norm()) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_off_plane(std::span<const Vec3> p, std::size_t i0,
                                           std::size_t i1, std::size_t i2) {
  const Vec3 a = p[i1] - p[i0];
  const Vec3 b = p[i2] - p[i0];
  const Vec3 n = a.cross(b);
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k == i0 || k == i1 || k == i2) continue;
    const Vec3 c = p[k] - p[i0];
    if (std::abs(n.dot(c)) > kSeedRelTol * a.norm() * b.norm() * c.norm()) return k;
  }
  return std::nullopt;
}

}  // namespace

AffineShape affine_shape(std::span<const Vec3> points, double rel_tol) {
  AffineShape shape;
  if (points.empty()) {
    shape.dimension = AffineDimension::Point;
    return shape;
  }
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : points) centroid += p;
  centroid /= static_cast<double>(points.size());
  shape.centroid = centroid;

  Eigen::MatrixXd centered(points.size(), 3);
  for (std::size_t i = 0; i < points.size(); ++i) centered.row(i) = (points[i] - centroid).transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const Eigen::Vector3d s = svd.singularValues();
  shape.direction = svd.matrixV().col(0);
  shape.normal = svd.matrixV().col(2);
  if (s(0) == 0.0) {
    shape.dimension = AffineDimension::Point;
  } else if (s(1) <= rel_tol * s(0)) {
    shape.dimension = AffineDimension::Line;
  } else if (s(2) <= rel_tol * s(0)) {
    shape.dimension = AffineDimension::Plane;
  } else {
    shape.dimension = AffineDimension::Space;
  }
  return shape;
}

CircleFit fit_circumcircle(std::span<const Vec3> points) {
  if (points.size() < 3) throw Error("no_circumcircle", "no circumcircle: fewer than 3 points");
  const auto k = first_off_line(points, 0, 1);
  if (!k) throw Error("no_circumcircle", "no circumcircle: points are collinear");

  const Vec3& p0 = points[0];
  const Vec3 a = points[1] - p0;
  const Vec3 b = points[*k] - p0;
  const Vec3 axb = a.cross(b);
  const Vec3 offset =
      (a.squaredNorm() * b.cross(axb) + b.squaredNorm() * axb.cross(a)) / (2.0 * axb.squaredNorm());

  CircleFit fit;
  fit.center = p0 + offset;
  fit.radius = offset.norm();
  fit.normal = axb.normalized();
  double worst = 0.0;
  for (const auto& p : points) {
    const Vec3 d = p - fit.center;
    const double height = d.dot(fit.normal);
    const double in_plane = (d - height * fit.normal).norm();
    worst = std::max(worst, std::hypot(in_plane - fit.radius, height));
  }
  fit.max_deviation = worst;
  return fit;
}

SphereFit fit_circumsphere(std::span<const Vec3> points) {
  if (points.size() < 4) throw Error("no_circumsphere", "no circumsphere: fewer than 4 points");
  const auto k = first_off_line(points, 0, 1);
  if (!k) throw Error("no_circumsphere", "no circumsphere: points are collinear");
  const auto l = first_off_plane(points, 0, 1, *k);

  SphereFit fit;
  if (!l) {
    const CircleFit circle = fit_circumcircle(points);
    if (!circle.is_cocircular()) {
      throw Error("no_circumsphere", "no circumsphere: points are coplanar but not co-circular");
    }
    fit.center = circle.center;
    fit.radius = circle.radius;
    fit.max_deviation = circle.max_deviation;
    fit.is_planar = true;
    return fit;
  }

  const Vec3& p0 = points[0];
  Eigen::Matrix3d lhs;
  Eigen::Vector3d rhs;
  const std::size_t seeds[3] = {1, *k, *l};
  for (int r = 0; r < 3; ++r) {
    const Vec3 d = points[seeds[r]] - p0;
    lhs.row(r) = 2.0 * d.transpose();
    rhs(r) = d.squaredNorm();
  }
  const Vec3 offset = lhs.colPivHouseholderQr().solve(rhs);
  fit.center = p0 + offset;
  fit.radius = offset.norm();
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, std::abs((p - fit.center).norm() - fit.radius));
  fit.max_deviation = worst;
  fit.is_planar = false;
  return fit;
}

}  // namespace stackedcc

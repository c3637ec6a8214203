#include <cmath>

#include "stackedcc/error.hpp"
#include "stackedcc/kernels.hpp"

namespace stackedcc::kernels::omp {

void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out) {
  const auto n = static_cast<long>(q.size());
  int degenerate = 0;
#pragma omp parallel for schedule(static) reduction(| : degenerate)
  for (long i = 0; i < n; ++i) {
    double ax = 0.0, ay = 0.0, az = 0.0;
    const Vec3 qi = q[i];
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      const double dx = q[j].x() - qi.x();
      const double dy = q[j].y() - qi.y();
      const double dz = q[j].z() - qi.z();
      const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
      if (r == 0.0) {
        degenerate |= 1;
        continue;
      }
      const double w = m[j] / (r * r * r);
      ax += w * dx;
      ay += w * dy;
      az += w * dz;
    }
    out[i] = Vec3(ax, ay, az);
  }
  if (degenerate) throw Error("degenerate_configuration", "degenerate configuration");
}

PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q) {
  const auto n = static_cast<long>(q.size());
  double potential = 0.0;
  double weighted_sq = 0.0;
  int degenerate = 0;
  // Triangular loop; dynamic scheduling evens out the shrinking rows.
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : potential, weighted_sq) \
    reduction(| : degenerate)
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) {
      const double r2 = (q[j] - q[i]).squaredNorm();
      if (r2 == 0.0) {
        degenerate |= 1;
        continue;
      }
      const double mm = m[i] * m[j];
      potential += mm / std::sqrt(r2);
      weighted_sq += mm * r2;
    }
  }
  if (degenerate) throw Error("degenerate_configuration", "degenerate configuration");
  return {potential, weighted_sq};
}

}  // namespace stackedcc::kernels::omp

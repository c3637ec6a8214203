#include <cmath>

#include "stackedcc/error.hpp"
#include "stackedcc/kernels.hpp"

namespace stackedcc::kernels {

namespace serial {

void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 acc = Vec3::Zero();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Vec3 d = q[j] - q[i];
      const double r = d.norm();
      if (r == 0.0) throw Error("degenerate_configuration", "degenerate configuration");
      acc += (m[j] / (r * r * r)) * d;
    }
    out[i] = acc;
  }
}

PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q) {
  PairSums s;
  const std::size_t n = q.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r2 = (q[j] - q[i]).squaredNorm();
      if (r2 == 0.0) throw Error("degenerate_configuration", "degenerate configuration");
      const double mm = m[i] * m[j];
      s.potential += mm / std::sqrt(r2);
      s.weighted_sq += mm * r2;
    }
  }
  return s;
}

}  // namespace serial

void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out) {
  if (q.size() >= kParallelThreshold) {
    omp::accelerations(m, q, out);
  } else {
    serial::accelerations(m, q, out);
  }
}

PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q) {
  return q.size() >= kParallelThreshold ? omp::pair_sums(m, q) : serial::pair_sums(m, q);
}

}  // namespace stackedcc::kernels

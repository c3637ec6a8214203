#pragma once

#include <cstddef>
#include <span>

#include "stackedcc/configuration.hpp"

// Pairwise O(n^2) gravitational sums. Each kernel exists twice: a plain
// serial loop kept as the reference, and an OpenMP version. The dispatching
// overloads at the bottom pick one by problem size.
namespace stackedcc::kernels {

struct PairSums {
  double potential = 0.0;       // sum_{i<j} m_i m_j / r_ij
  double weighted_sq = 0.0;     // sum_{i<j} m_i m_j r_ij^2
};

namespace serial {
/// out[i] = sum_{j != i} m_j (q_j - q_i) / r_ij^3. Throws on r_ij == 0.
void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out);
PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q);
}  // namespace serial

namespace omp {
void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out);
PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q);
}  // namespace omp

/// Below this body count the OpenMP fork costs more than it saves.
inline constexpr std::size_t kParallelThreshold = 256;

void accelerations(std::span<const double> m, std::span<const Vec3> q, std::span<Vec3> out);
PairSums pair_sums(std::span<const double> m, std::span<const Vec3> q);

}  // namespace stackedcc::kernels

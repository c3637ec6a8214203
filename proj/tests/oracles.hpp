#pragma once

// Brute-force reference formulas in long double, written from the
// definitions and kept independent of the library's kernels.

#include <cmath>
#include <random>
#include <vector>

#include "stackedcc/configuration.hpp"

namespace oracle {

using ld = long double;

struct Pt {
  ld x, y, z;
};

inline std::vector<Pt> points(const stackedcc::Configuration& c) {
  std::vector<Pt> out;
  for (const auto& q : c.positions()) out.push_back({q.x(), q.y(), q.z()});
  return out;
}

inline ld dist(const Pt& a, const Pt& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

inline ld potential(const stackedcc::Configuration& c) {
  const auto p = points(c);
  ld u = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) u += c.mass(i) * c.mass(j) / dist(p[i], p[j]);
  return u;
}

inline Pt center(const stackedcc::Configuration& c) {
  const auto p = points(c);
  Pt s{0, 0, 0};
  ld m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    s.x += c.mass(i) * p[i].x;
    s.y += c.mass(i) * p[i].y;
    s.z += c.mass(i) * p[i].z;
    m += c.mass(i);
  }
  return {s.x / m, s.y / m, s.z / m};
}

inline ld inertia(const stackedcc::Configuration& c) {
  const auto p = points(c);
  const Pt g = center(c);
  ld s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += c.mass(i) * dist(p[i], g) * dist(p[i], g);
  return s;
}

inline ld total_mass(const stackedcc::Configuration& c) {
  ld m = 0;
  for (double mi : c.masses()) m += mi;
  return m;
}

inline ld lambda(const stackedcc::Configuration& c) { return potential(c) / inertia(c); }

inline ld r0(const stackedcc::Configuration& c) {
  return std::cbrt(total_mass(c) / lambda(c));
}

/// Normalized CC residual straight from the definition.
inline ld residual(const stackedcc::Configuration& c) {
  const auto p = points(c);
  const Pt g = center(c);
  const ld lam = lambda(c);
  ld sum = 0, rmax = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    ld ax = 0, ay = 0, az = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      const ld r = dist(p[i], p[j]);
      const ld k = c.mass(j) / (r * r * r);
      ax += k * (p[j].x - p[i].x);
      ay += k * (p[j].y - p[i].y);
      az += k * (p[j].z - p[i].z);
    }
    ax += lam * (p[i].x - g.x);
    ay += lam * (p[i].y - g.y);
    az += lam * (p[i].z - g.z);
    sum += ax * ax + ay * ay + az * az;
    rmax = std::max(rmax, dist(p[i], g));
  }
  return std::sqrt(sum) / (lam * rmax * std::sqrt(static_cast<ld>(p.size())));
}

/// A(n) summed in long double.
inline ld cosecant_sum(int n) {
  const ld pi = 3.141592653589793238462643383279502884L;
  ld s = 0;
  for (int k = 1; k < n; ++k) s += 1 / std::sin(k * pi / n);
  return s / 4;
}

inline stackedcc::Configuration random_configuration(std::size_t n, std::mt19937_64& rng,
                                                     bool planar = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), m(0.5, 3.0);
  std::vector<double> masses;
  std::vector<stackedcc::Vec3> q;
  for (std::size_t i = 0; i < n; ++i) {
    masses.push_back(m(rng));
    q.emplace_back(u(rng), u(rng), planar ? 0.0 : u(rng));
  }
  return stackedcc::Configuration(std::move(masses), std::move(q));
}

inline std::vector<double> random_masses(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> m(0.2, 5.0);
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(m(rng));
  return out;
}

}  // namespace oracle

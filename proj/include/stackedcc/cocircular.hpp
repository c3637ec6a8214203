#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "stackedcc/configuration.hpp"
#include "stackedcc/json_io.hpp"
#include "stackedcc/newton.hpp"

namespace stackedcc {

/// Bodies on a circle centered at the origin of the xy-plane, listed
/// counterclockwise from angle 0.
struct CocircularCC {
  std::vector<double> angles;  // 0 = angles[0] < angles[1] < ... < 2 pi
  std::vector<double> masses;
  double radius = 1.0;

  std::size_t size() const { return angles.size(); }
  Configuration to_configuration() const;
  double r0() const;
  double chord(std::size_t i, std::size_t j) const;
  /// S_kj = 1/r_kj^3 - 1/r0^3, symmetric; the diagonal is NaN.
  Eigen::MatrixXd s_matrix() const;
};

/// Validates ordering, positivity and the angle range.
CocircularCC make_cocircular(std::vector<double> angles, std::vector<double> masses,
                             double radius = 1.0);

/// Fits the circle, rotates body order to start at body 0, and expresses the
/// configuration in circle coordinates. Throws "not_cocircular" otherwise.
CocircularCC cocircular_from_configuration(const Configuration& config);

struct SideDiagonalReport {
  std::size_t n = 0;
  double r = 0.0;
  double r0 = 0.0;
  bool is_central = false;
  /// r0 - |q_k q_{k+1}| for each exterior side k (cyclic); all > 0 expected.
  std::vector<double> side_margins;
  /// (longest diagonal at vertex i) - r0; all > 0 expected.
  std::vector<double> vertex_diagonal_margins;
  std::size_t diagonals_below_r0 = 0;
  std::size_t diagonals_above_r0 = 0;
  bool sides_below_r0 = false;
  bool each_vertex_has_long_diagonal = false;
  /// S > 0 on exterior sides and every row of S has a negative entry.
  bool s_sign_pattern = false;

  bool holds() const { return sides_below_r0 && each_vertex_has_long_diagonal; }
};

/// Exterior sides versus r0 and the longest incident diagonal at each
/// vertex. n < 4 throws "no_diagonals".
SideDiagonalReport side_diagonal_report(const CocircularCC& cc);

/// True when the bodies do not fit in any closed semicircle, i.e. every
/// cyclic angular gap is below pi.
bool semicircle_check(const CocircularCC& cc);

/// r0 - r.
double radius_vs_r0(const CocircularCC& cc);

enum class Symmetry { None, Trapezoid, Kite };
Symmetry symmetry_from_string(std::string_view text);

/// Extra equations for the four-body solve. Unknowns are (theta2, theta3,
/// theta4, m2, m3, m4) with theta1 = 0, m1 = 1 and unit radius.
///   Trapezoid: mirror axis swapping bodies 1<->2 and 3<->4, m1 = m2, m3 = m4.
///   Kite: mirror axis through bodies 1 and 3, m2 = m4.
/// Indices in fixed_angles / fixed_masses are zero-based body indices 1..3.
struct Cocircular4Constraints {
  Symmetry symmetry = Symmetry::None;
  std::vector<std::pair<int, double>> fixed_angles;
  std::vector<std::pair<int, double>> fixed_masses;

  /// "none", "trapezoid" or "kite"; the two symmetric families also pin
  /// theta2 to the seed's value, which selects one member of the family.
  static Cocircular4Constraints named(std::string_view name, const CocircularCC& seed);
};

/// Co-circular CC residual (8 rows, sum_k m_k S_kj (q_k - q_j) for each j) followed
/// by one row per constraint.
newton::Vector cocircular4_residual(const newton::Vector& x, const Cocircular4Constraints& cons);

/// Seed in solver coordinates; masses are divided by m1 and angles shifted
/// so theta1 = 0.
newton::Vector cocircular4_unknowns(const CocircularCC& seed);

struct Solve4Result {
  CocircularCC cc;
  int iterations = 0;
  double residual_norm = 0.0;
};

/// Damped Newton on the co-circular CC equations. Throws
/// "newton_no_convergence" or "negative_mass" on failure.
Solve4Result solve_cocircular_4body(const CocircularCC& seed, const Cocircular4Constraints& cons,
                                    const newton::Options& options = {});

struct SymmetryReport {
  bool kite = false;       // mirror axis through two opposite bodies
  bool trapezoid = false;  // mirror axis through no body
};

/// Mirror symmetries of a four-body angle set, to `tol` radians.
SymmetryReport angle_symmetry(const CocircularCC& cc, double tol = 1e-8);

Json to_json(const CocircularCC& cc);
CocircularCC cocircular_from_json(const Json& j);
Json to_json(const SideDiagonalReport& rep);

}  // namespace stackedcc

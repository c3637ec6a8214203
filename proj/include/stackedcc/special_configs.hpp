#pragma once

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "stackedcc/configuration.hpp"
#include "stackedcc/extension.hpp"
#include "stackedcc/json_io.hpp"

namespace stackedcc {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// A(n) = (1/4) sum_{k=1}^{n-1} csc(k pi / n). For the equal-mass regular
/// n-gon of unit radius, U = n A(n) and r0^3 = n / A(n).
double cosecant_sum(int n);

struct NgonReport {
  int n = 0;
  double A = 0.0;
  double n_over_A = 0.0;
  double ratio = 0.0;                  // r0 / r = (n / A)^(1/3)
  bool pyramidal_ok = false;           // ratio > 1
  bool masscenter_pyramid_ok = false;  // ratio > sqrt 2
  int r0_eq_R_side = 0;                // sign(ratio - 2/sqrt 3)
  double pyramidal_margin = 0.0;       // ratio - 1
  double masscenter_margin = 0.0;      // ratio - sqrt 2
  double r0_eq_R_margin = 0.0;         // ratio - 2/sqrt 3
};

NgonReport ngon_report(int n);

/// Reports for n in [from, to]; the OpenMP version fills rows in parallel.
std::vector<NgonReport> ngon_table(int from, int to);
std::vector<NgonReport> ngon_table_serial(int from, int to);

std::string ngon_csv_header();
std::string ngon_csv_row(const NgonReport& r);

struct AsymptoticCheck {
  int n = 0;
  double direct = 0.0;     // A(n) / n
  double leading = 0.0;    // (gamma + log(2n/pi)) / (2 pi)
  double k1_term = 0.0;    // -pi / (144 n^2)
  double remainder = 0.0;  // direct - leading
  bool within_bound = false;  // |remainder| < 2 |k1_term|
};

/// Large-n expansion of A(n)/n against the direct sum; n >= 100.
AsymptoticCheck ngon_asymptotic_check(int n);

struct BiPyramid {
  int n = 0;
  double polar_mass = 0.0;  // a
  Configuration configuration;
  double lambda_equator = 0.0;  // A(n) + a / sqrt 2
  double lambda_pole = 0.0;     // n / (2 sqrt 2) + a / 4
  double R0 = 0.0;
};

/// Unit equal-mass n-gon on the equator plus two masses a at (0, 0, +-1),
/// a = (n/(2 sqrt 2) - A(n)) / (1/sqrt 2 - 1/4). Throws
/// "no_positive_polar_mass" unless 3 <= n <= 8.
BiPyramid build_bipyramid(int n);

/// Apex mass that puts the mass center of the pyramid over the unit
/// equal-mass n-gon at its circumscribing sphere's center. Positive iff
/// r0 > sqrt 2 r. Throws "not_pyramidal" when the n-gon has r0 <= r.
double pyramid_masscenter_apex_mass(int n);

enum class NamedKind {
  TwoBody,
  EquilateralTriangle,
  Square,
  RegularNgon,
  NgonPlusCenter,
  SquarePlusCenter,
  RegularTetrahedron,
  TetrahedronPlusCenter,
  PyramidOver,
};

NamedKind named_kind_from_string(std::string_view text);
std::vector<std::string> named_kind_names();

struct NamedParams {
  std::vector<double> masses;  // outer bodies; empty means all 1
  double m0 = 1.0;             // center or apex mass
  int n = 0;                   // polygon size for the n-gon kinds
  double scale = 1.0;          // edge length, or radius for n-gons
};

/// Exact-coordinate generators. Added bodies (centers, apexes) sit at index 0.
/// Nothing is forced central; check with cc_report.
Configuration named_config(NamedKind kind, const NamedParams& params);

/// Way III extension of a co-circular central base.
Configuration pyramid_over(const Configuration& base, double m0, Apex apex = Apex::Plus);

Json to_json(const NgonReport& r);
Json to_json(const AsymptoticCheck& c);
Json to_json(const BiPyramid& b);

}  // namespace stackedcc

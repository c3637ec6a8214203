#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stackedcc/configuration.hpp"
#include "stackedcc/json_io.hpp"

namespace stackedcc {

/// The five ways an n-body CC extends to a non-collinear (n+1)-body CC.
///   I   co-circular, mass center == circle center, add at the center.
///   II  co-circular, mass center != circle center, r == r0, add at the center.
///   III co-circular, r < r0, add on the circle axis at height sqrt(r0^2 - r^2).
///   IV  co-spherical, mass center == sphere center, add at the center.
///   V   co-spherical, mass center != sphere center, r == r0, add at the center.
enum class ExtensionWay { I, II, III, IV, V };

std::string to_string(ExtensionWay way);
ExtensionWay extension_way_from_string(std::string_view text);

/// Which of the two mirror apexes to use for way III.
enum class Apex { Plus, Minus };

/// Relative tolerance for "c equals the geometric center" and "r equals r0".
inline constexpr double kEqualityRelTol = 1e-10;

struct ExtensionPlan {
  ExtensionWay way = ExtensionWay::I;
  /// One point, or the (+h, -h) apex pair for way III.
  std::vector<Vec3> added_positions;
  bool mass_free = true;  // m0 is arbitrary in every way
  double height = 0.0;    // way III only
  double r = 0.0;         // circle / sphere radius
  double r0 = 0.0;        // of the n-body configuration
  Vec3 center = Vec3::Zero();
  Vec3 normal = Vec3::UnitZ();  // circle normal; unused for ways IV/V
};

struct CExtensionCheck {
  bool holds = false;
  double spread = 0.0;  // (max - min) / max of |q_i - c|
};

/// Can m0 be added at the mass center? True iff all |q_i - c| agree.
/// Throws "sub_configuration_not_central" for non-central input.
CExtensionCheck check_c_extension(const Configuration& config);

/// Every applicable extension plan of a central configuration. Two-body
/// input is treated as co-circular (ways I and II); collinear input with
/// n >= 3 throws "collinear_input".
std::vector<ExtensionPlan> classify_extensions(const Configuration& config);

/// (n+1)-body configuration with m0 at index 0. Throws "plan_mismatch" if
/// the plan does not belong to `config`.
Configuration build_extension(const Configuration& config, const ExtensionPlan& plan, double m0,
                              Apex apex = Apex::Plus);

struct RBar0Report {
  double r0 = 0.0;
  std::vector<double> m0;
  std::vector<double> rbar0;
  double max_rel_deviation = 0.0;
  bool holds = false;  // max_rel_deviation <= 1e-12
};

/// r0 of the extended configuration for each m0; ways II, III and V only.
RBar0Report rbar0_invariance(const Configuration& config, const ExtensionPlan& plan,
                             std::span<const double> m0_samples);

/// Central, and every subset obtained by dropping one body is central.
bool fully_stacked_check(const Configuration& config);

struct PyramidalCheck {
  std::size_t apex_index = 0;
  bool base_central = false;
  bool base_cocircular = false;
  double r = 0.0;
  double r0 = 0.0;
  bool r_below_r0 = false;
  double axis_offset = 0.0;  // distance of the apex's foot from the circle center
  double height = 0.0;
  double expected_height = 0.0;
  bool apex_on_axis = false;
  bool height_matches = false;
  bool verdict = false;
  bool full_is_central = false;  // cc_report on the whole configuration
};

/// Characterization of pyramidal CCs: base central and co-circular, r < r0,
/// apex on the axis at sqrt(r0^2 - r^2). Throws "not_pyramidal" unless some
/// body lies off the plane of all the others.
PyramidalCheck pyramidal_check(const Configuration& config);

Json to_json(const ExtensionPlan& plan);
Json to_json(const PyramidalCheck& check);

}  // namespace stackedcc

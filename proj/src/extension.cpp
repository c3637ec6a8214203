#include "stackedcc/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Geometry>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/error.hpp"
#include "stackedcc/geometry_fit.hpp"

namespace stackedcc {

std::string to_string(ExtensionWay way) {
  switch (way) {
    case ExtensionWay::I: return "I";
    case ExtensionWay::II: return "II";
    case ExtensionWay::III: return "III";
    case ExtensionWay::IV: return "IV";
    case ExtensionWay::V: return "V";
  }
  return "?";
}

ExtensionWay extension_way_from_string(std::string_view text) {
  if (text == "I") return ExtensionWay::I;
  if (text == "II") return ExtensionWay::II;
  if (text == "III") return ExtensionWay::III;
  if (text == "IV") return ExtensionWay::IV;
  if (text == "V") return ExtensionWay::V;
  throw Error("invalid_argument", "unknown extension way '" + std::string(text) + "'");
}

namespace {

void require_central(const Configuration& config) {
  if (!is_central(config)) {
    throw Error("sub_configuration_not_central", "sub-configuration not central");
  }
}

bool nearly_equal(double a, double b, double scale) {
  return std::abs(a - b) <= kEqualityRelTol * scale;
}

// Unit vector orthogonal to d, built from the coordinate axis least aligned
// with it so the choice is deterministic.
Vec3 perpendicular_to(const Vec3& d) {
  const Vec3 u = d.normalized();
  Eigen::Index axis = 0;
  u.cwiseAbs().minCoeff(&axis);
  Vec3 e = Vec3::Zero();
  e(axis) = 1.0;
  return (e - e.dot(u) * u).normalized();
}

std::vector<ExtensionPlan> two_body_plans(const Configuration& config) {
  const Vec3& q1 = config.position(0);
  const Vec3& q2 = config.position(1);
  const Vec3 d = q2 - q1;
  const double len = d.norm();
  const Vec3 mid = 0.5 * (q1 + q2);
  const Vec3 w = perpendicular_to(d);
  const double r0 = len;  // r0 = r12 for two bodies

  std::vector<ExtensionPlan> plans;
  if (nearly_equal((center_of_mass(config) - mid).norm(), 0.0, len)) {
    ExtensionPlan p;
    p.way = ExtensionWay::I;
    p.r = 0.5 * len;
    p.r0 = r0;
    p.center = mid;
    p.normal = d.cross(w).normalized();
    p.added_positions = {mid};
    plans.push_back(p);
  }
  // A circle of radius r0 through both ends; its center forms the
  // equilateral triangle.
  ExtensionPlan p;
  p.way = ExtensionWay::II;
  p.r = r0;
  p.r0 = r0;
  p.center = mid + (std::sqrt(3.0) / 2.0) * len * w;
  p.normal = d.cross(w).normalized();
  p.added_positions = {p.center};
  plans.push_back(p);
  return plans;
}

}  // namespace

CExtensionCheck check_c_extension(const Configuration& config) {
  require_central(config);
  const Vec3 c = center_of_mass(config);
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& q : config.positions()) {
    const double d = (q - c).norm();
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  CExtensionCheck out;
  out.spread = (hi - lo) / hi;
  out.holds = out.spread <= kEqualityRelTol;
  return out;
}

std::vector<ExtensionPlan> classify_extensions(const Configuration& config) {
  require_central(config);
  if (config.size() == 2) return two_body_plans(config);

  const auto shape = affine_shape(config.positions());
  if (shape.dimension == AffineDimension::Line) {
    throw Error("collinear_input",
                "collinear configuration: use the collinear module (no collinear extension for n >= 3)");
  }
  const Vec3 c = center_of_mass(config);
  const double r0 = stackedcc::r0(config);
  std::vector<ExtensionPlan> plans;

  if (shape.dimension == AffineDimension::Plane) {
    const CircleFit fit = fit_circumcircle(config.positions());
    if (!fit.is_cocircular()) {
      throw Error("not_cocircular_or_cospherical", "not co-circular or co-spherical");
    }
    const bool c_is_center = nearly_equal((c - fit.center).norm(), 0.0, fit.radius);
    const bool r_is_r0 = nearly_equal(fit.radius, r0, r0);

    ExtensionPlan base;
    base.r = fit.radius;
    base.r0 = r0;
    base.center = fit.center;
    base.normal = fit.normal;

    if (c_is_center) {
      ExtensionPlan p = base;
      p.way = ExtensionWay::I;
      p.added_positions = {fit.center};
      plans.push_back(p);
    } else if (r_is_r0) {
      ExtensionPlan p = base;
      p.way = ExtensionWay::II;
      p.added_positions = {fit.center};
      plans.push_back(p);
    }
    if (fit.radius < r0 && !r_is_r0) {
      ExtensionPlan p = base;
      p.way = ExtensionWay::III;
      p.height = std::sqrt(r0 * r0 - fit.radius * fit.radius);
      p.added_positions = {fit.center + p.height * fit.normal, fit.center - p.height * fit.normal};
      plans.push_back(p);
    }
    return plans;
  }

  const SphereFit fit = fit_circumsphere(config.positions());
  if (!fit.is_cospherical()) {
    throw Error("not_cocircular_or_cospherical", "not co-circular or co-spherical");
  }
  ExtensionPlan base;
  base.r = fit.radius;
  base.r0 = r0;
  base.center = fit.center;
  base.added_positions = {fit.center};
  if (nearly_equal((c - fit.center).norm(), 0.0, fit.radius)) {
    base.way = ExtensionWay::IV;
    plans.push_back(base);
  } else if (nearly_equal(fit.radius, r0, r0)) {
    base.way = ExtensionWay::V;
    plans.push_back(base);
  }
  return plans;
}

Configuration build_extension(const Configuration& config, const ExtensionPlan& plan, double m0,
                              Apex apex) {
  if (!(m0 > 0.0)) throw Error("invalid_argument", "m0 must be positive");
  if (plan.added_positions.empty()) throw Error("plan_mismatch", "plan has no added position");
  const bool way3 = plan.way == ExtensionWay::III;
  if (way3 && plan.added_positions.size() != 2) {
    throw Error("plan_mismatch", "way III plan must carry two apexes");
  }
  const Vec3 q0 = (way3 && apex == Apex::Minus) ? plan.added_positions[1] : plan.added_positions[0];

  const double r0 = stackedcc::r0(config);
  if (!nearly_equal(plan.r0, r0, r0)) {
    throw Error("plan_mismatch", "plan r0 does not match the configuration");
  }
  const bool at_r0 = plan.way == ExtensionWay::II || way3 || plan.way == ExtensionWay::V;
  const double expected = at_r0 ? r0 : plan.r;
  for (const auto& q : config.positions()) {
    if (std::abs((q - q0).norm() - expected) > 1e-9 * expected) {
      throw Error("plan_mismatch", "added point is not at the planned distance from every body");
    }
  }
  return config.with_added(m0, q0);
}

RBar0Report rbar0_invariance(const Configuration& config, const ExtensionPlan& plan,
                             std::span<const double> m0_samples) {
  if (plan.way == ExtensionWay::I || plan.way == ExtensionWay::IV) {
    throw Error("invariance_not_applicable", "r0 invariance only holds for ways II, III and V");
  }
  RBar0Report rep;
  rep.r0 = stackedcc::r0(config);
  for (double m0 : m0_samples) {
    const double rb = stackedcc::r0(build_extension(config, plan, m0));
    rep.m0.push_back(m0);
    rep.rbar0.push_back(rb);
    rep.max_rel_deviation = std::max(rep.max_rel_deviation, std::abs(rb - rep.r0) / rep.r0);
  }
  rep.holds = rep.max_rel_deviation <= 1e-12;
  return rep;
}

bool fully_stacked_check(const Configuration& config) {
  if (!is_central(config)) return false;
  if (config.size() <= 2) return true;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (!is_central(config.without(i))) return false;
  }
  return true;
}

PyramidalCheck pyramidal_check(const Configuration& config) {
  if (config.size() < 4) throw Error("not_pyramidal", "not pyramidal: need at least 4 bodies");

  PyramidalCheck out;
  bool found = false;
  for (std::size_t i = 0; i < config.size() && !found; ++i) {
    const Configuration base = config.without(i);
    const auto shape = affine_shape(base.positions());
    if (shape.dimension != AffineDimension::Plane) continue;
    double scale = 0.0;
    for (const auto& q : base.positions()) scale = std::max(scale, (q - shape.centroid).norm());
    const double off = std::abs((config.position(i) - shape.centroid).dot(shape.normal));
    if (off > kAffineRelTol * scale) {
      out.apex_index = i;
      found = true;
    }
  }
  if (!found) throw Error("not_pyramidal", "not pyramidal: no body lies off the plane of the others");

  const Configuration base = config.without(out.apex_index);
  const Vec3& apex = config.position(out.apex_index);
  out.base_central = is_central(base);
  out.r0 = stackedcc::r0(base);
  out.full_is_central = is_central(config);

  const CircleFit fit = fit_circumcircle(base.positions());
  out.base_cocircular = fit.is_cocircular();
  out.r = fit.radius;
  out.r_below_r0 = out.r < out.r0;

  const Vec3 d = apex - fit.center;
  out.height = std::abs(d.dot(fit.normal));
  out.axis_offset = (d - d.dot(fit.normal) * fit.normal).norm();
  out.apex_on_axis = out.axis_offset <= 1e-9 * out.r;
  out.expected_height = out.r_below_r0 ? std::sqrt(out.r0 * out.r0 - out.r * out.r) : 0.0;
  out.height_matches = out.r_below_r0 && std::abs(out.height - out.expected_height) <= 1e-9 * out.r0;

  out.verdict = out.base_central && out.base_cocircular && out.r_below_r0 && out.apex_on_axis &&
                out.height_matches;
  return out;
}

Json to_json(const ExtensionPlan& plan) {
  Json added = Json::array();
  for (const auto& q : plan.added_positions) added.push_back(to_json(q));
  Json j{{"way", to_string(plan.way)},
         {"added_positions", added},
         {"mass_free", plan.mass_free},
         {"r", plan.r},
         {"r0", plan.r0},
         {"center", to_json(plan.center)}};
  if (plan.way == ExtensionWay::III) j["height"] = plan.height;
  if (plan.way == ExtensionWay::I || plan.way == ExtensionWay::II || plan.way == ExtensionWay::III) {
    j["normal"] = to_json(plan.normal);
  }
  return j;
}

Json to_json(const PyramidalCheck& c) {
  return Json{{"apex_index", c.apex_index},
              {"base_central", c.base_central},
              {"base_cocircular", c.base_cocircular},
              {"r", c.r},
              {"r0", c.r0},
              {"r_below_r0", c.r_below_r0},
              {"axis_offset", c.axis_offset},
              {"height", c.height},
              {"expected_height", c.expected_height},
              {"apex_on_axis", c.apex_on_axis},
              {"height_matches", c.height_matches},
              {"verdict", c.verdict},
              {"full_is_central", c.full_is_central}};
}

}  // namespace stackedcc

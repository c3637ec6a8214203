#include "stackedcc/json_io.hpp"

#include <fstream>
#include <iostream>

#include "stackedcc/error.hpp"

namespace stackedcc {

Json to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) {
    throw Error("invalid_json", "a position must be an array of 2 or 3 numbers");
  }
  for (const auto& x : j) {
    if (!x.is_number()) throw Error("invalid_json", "position entries must be numbers");
  }
  return Vec3(j[0].get<double>(), j[1].get<double>(), j.size() == 3 ? j[2].get<double>() : 0.0);
}

Json to_json(const Configuration& config) {
  Json masses = Json::array();
  Json positions = Json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    masses.push_back(config.mass(i));
    positions.push_back(to_json(config.position(i)));
  }
  return Json{{"masses", masses}, {"positions", positions}};
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("masses") || !j.contains("positions")) {
    throw Error("invalid_json", "configuration needs \"masses\" and \"positions\"");
  }
  const Json& jm = j.at("masses");
  const Json& jq = j.at("positions");
  if (!jm.is_array() || !jq.is_array()) {
    throw Error("invalid_json", "\"masses\" and \"positions\" must be arrays");
  }
  std::vector<double> masses;
  std::vector<Vec3> positions;
  for (const auto& m : jm) {
    if (!m.is_number()) throw Error("invalid_json", "masses must be numbers");
    masses.push_back(m.get<double>());
  }
  for (const auto& q : jq) positions.push_back(vec3_from_json(q));
  return Configuration(std::move(masses), std::move(positions));
}

Json to_json(const CCReport& r) {
  return Json{{"total_mass", r.total_mass},
              {"center_of_mass", to_json(r.center_of_mass)},
              {"force_function", r.force_function},
              {"moment_of_inertia", r.moment_of_inertia},
              {"multiplier", r.multiplier},
              {"r0", r.r0},
              {"residual_norm", r.residual_norm},
              {"tolerance", r.tolerance},
              {"is_central", r.is_central}};
}

Json read_json_file(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("io_error", "cannot open " + path);
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("invalid_json", e.what());
  }
}

}  // namespace stackedcc

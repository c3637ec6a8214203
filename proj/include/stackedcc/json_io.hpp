#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "stackedcc/cc_report.hpp"
#include "stackedcc/configuration.hpp"

namespace stackedcc {

using Json = nlohmann::json;

Json to_json(const Vec3& v);
Vec3 vec3_from_json(const Json& j);  // accepts [x, y] (z = 0) or [x, y, z]

/// {"masses": [...], "positions": [[x, y, z], ...]}; always emits 3-vectors.
Json to_json(const Configuration& config);
Configuration configuration_from_json(const Json& j);

Json to_json(const CCReport& report);

/// Reads a JSON document from `path`, or from stdin when path is "-".
Json read_json_file(const std::string& path);

}  // namespace stackedcc

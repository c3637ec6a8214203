#pragma once

#include <string>
#include <vector>

#include "stackedcc/json_io.hpp"

namespace stackedcc::cli {

enum class Status { Ok, Failed };

struct CommandResult {
  Status status = Status::Ok;
  Json payload;
  std::string human_summary;

  bool ok() const { return status == Status::Ok; }
};

/// Runs one subcommand. `args` excludes the program name. Never throws;
/// failures come back with payload {"error": code, "message": text}.
CommandResult run(const std::vector<std::string>& args);
CommandResult run(int argc, const char* const* argv);

/// Tolerance from STACKEDCC_TOL, else the library default.
double default_tolerance();

}  // namespace stackedcc::cli

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stackedcc {

/// Library error carrying a stable machine-readable code (e.g.
/// "degenerate_configuration") next to the human message. The CLI forwards
/// code() verbatim in its "error" payload field.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace stackedcc

#include <iostream>

#include "stackedcc/cli.hpp"

int main(int argc, char** argv) {
  const auto result = stackedcc::cli::run(argc, argv);
  if (!result.payload.is_null() && !(result.payload.is_object() && result.payload.empty())) {
    std::cout << result.payload.dump(2) << '\n';
  }
  if (!result.human_summary.empty()) std::cerr << result.human_summary << '\n';
  return result.ok() ? 0 : 1;
}

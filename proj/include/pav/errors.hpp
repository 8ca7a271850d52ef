#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pav {

// All domain failures carry a stable machine-readable code (e.g. "NotIsotropic",
// "DegenerateForm") plus an optional input location ("$.basis[2][3]") used by the
// CLI when the failure stems from a parsed file.
struct Error : std::runtime_error {
  std::string code;
  std::string location;

  Error(std::string c, const std::string& message, std::string loc = "")
      : std::runtime_error(message), code(std::move(c)), location(std::move(loc)) {}
};

}  // namespace pav

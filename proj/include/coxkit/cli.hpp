#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coxkit {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
  std::optional<nlohmann::json> json;
};

// args excludes the program name. With --json the payload is filled and
// text holds its serialization.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace coxkit

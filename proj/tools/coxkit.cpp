#include <iostream>
#include <string>
#include <vector>

#include "coxkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = coxkit::run_cli(args);
  if (!result.text.empty())
    (result.exit_code == coxkit::kExitError ? std::cerr : std::cout) << result.text << '\n';
  return result.exit_code;
}

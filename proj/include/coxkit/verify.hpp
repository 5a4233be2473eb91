#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxkit {

struct VerifyOptions {
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0;
  double time_limit = 0;  // seconds; 0 means none
  std::string detail;     // first failures, or a short summary
};

// Suite names in criterion order: orders, deodhar, core, centralizer,
// center-factor, properties, isomorphism, aut, hommonoid, richardson.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace coxkit

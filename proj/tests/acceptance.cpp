// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "coxkit/verify.hpp"

int main(int argc, char** argv) {
  coxkit::VerifyOptions options;
  if (const char* seed = std::getenv("COXKIT_SEED")) options.seed = std::strtoull(seed, nullptr, 10);
  const auto& names = coxkit::suite_names();
  int failed = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (argc > 1 && names[i] != argv[1]) continue;
    auto r = coxkit::run_suite(names[i], options);
    std::printf("%s criterion %zu (%s): %zu checks, %zu failures, %.1fs%s -- %s\n",
                r.passed ? "PASS" : "FAIL", i + 1, r.name.c_str(), r.checks, r.failures, r.seconds,
                r.time_limit > 0 ? (" (limit " + std::to_string(static_cast<int>(r.time_limit)) + "s)").c_str()
                                 : "",
                r.detail.c_str());
    std::fflush(stdout);
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}

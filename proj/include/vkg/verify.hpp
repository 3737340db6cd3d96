#pragma once

#include <string>
#include <vector>

namespace vkg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
  double seconds = 0.0;
  std::string detail;
};

struct VerifyOptions {
  bool inject_fault = false;  // corrupt one structure constant before the algebra checks
};

/// Suites: geometry, algebra, energies, solver, all. Throws std::invalid_argument on unknown names.
std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opt = {});

std::string to_json_line(const CheckResult& r);

}  // namespace vkg

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poncelet/io.hpp"

namespace poncelet {

struct CheckOptions {
  // 0 keeps each check's default trial count
  int trials = 0;
  std::uint64_t seed = 20230917;
  // per-check tolerance overrides, e.g. {"closure", 1e-9}
  std::map<std::string, double> tol;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  json report;
};

// Named theorem checks in acceptance order.
const std::vector<std::string>& check_names();

CheckResult run_check(const std::string& name, const CheckOptions& opts = {});
std::vector<CheckResult> run_all(const CheckOptions& opts = {});

json to_json(const CheckResult& r);

}  // namespace poncelet

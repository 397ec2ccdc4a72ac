#pragma once

#include <string>
#include <vector>

namespace probgroup {

/// One verified identity: its name, whether it held, how far off it was, and
/// a witness locating the worst violation.
struct Check {
  std::string name;
  bool pass = false;
  double deviation = 0.0;
  std::string witness;
};

struct ValidationReport {
  std::vector<Check> checks;

  bool allPass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* firstFailure() const {
    for (const Check& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }

  Check& add(std::string name) {
    checks.push_back(Check{std::move(name), false, 0.0, {}});
    return checks.back();
  }
};

}  // namespace probgroup

#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qcube {

/// One named numerical check: measured worst violation against a tolerance.
struct Check {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string detail;
};

/// A bundle of checks; passes iff every check passes.
struct Report {
  std::string title;
  std::vector<Check> checks;

  void add(std::string name, double violation, double tolerance, std::string detail = "") {
    checks.push_back(
        {std::move(name), violation, tolerance, violation <= tolerance, std::move(detail)});
  }

  void add_check(Check c) { checks.push_back(std::move(c)); }

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  double max_violation() const {
    double worst = 0.0;
    for (const Check& c : checks) worst = std::max(worst, c.max_violation);
    return worst;
  }
};

}  // namespace qcube

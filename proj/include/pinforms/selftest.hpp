#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pinforms {

struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;  ///< first failure, empty when passed
};

/// Runs the full acceptance suite over the reference surface family.
std::vector<CriterionResult> run_acceptance();

/// Prints one PASS/FAIL line per criterion plus a summary; returns 0 iff
/// every criterion passed.
int run_selftest(std::ostream& out);

}  // namespace pinforms

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atomwalk::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;               // measured values against thresholds
  std::vector<std::string> notes;   // reported discrepancies, failing rows
  double seconds = 0.0;
};

/// Runs every acceptance criterion with its pinned tolerances.
std::vector<CriterionResult> run_all();

/// One "PASS"/"FAIL" line per criterion followed by indented notes.
void print(const std::vector<CriterionResult>& results, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace atomwalk::acceptance

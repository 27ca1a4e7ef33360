#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace slelab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<CriterionResult()> run;
};

const std::vector<Criterion>& criteria();

/// Runs one criterion, timing it; exceptions count as failures. A run over
/// its time budget fails as well.
CriterionResult run_criterion(const Criterion& c);

/// "[PASS] 4 kappa solver (0.12s): detail"
std::string format_line(const CriterionResult& r);

/// Runs the selected ids (all when empty), printing one line per criterion.
std::vector<CriterionResult> run_suite(const std::vector<int>& ids, std::ostream& out);

}  // namespace slelab::acceptance

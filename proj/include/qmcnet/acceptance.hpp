#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qmcnet {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
  double limit_seconds;
};

struct AcceptanceOptions {
  std::size_t threads = 1;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// One line per criterion; returns true if every criterion passed.
bool print_acceptance(std::ostream& os, const std::vector<CriterionResult>& results);
void print_criterion(std::ostream& os, const CriterionResult& result);

}  // namespace qmcnet

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace asc {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  // Negative control: drop one relation of the Gamma presentation.
  bool corrupt_gamma = false;
  std::vector<int> only;  // empty runs every criterion
};

// Acceptance criteria 1-9 on the worked examples.
std::vector<CriterionResult> run_example_suite(const SuiteOptions& opts = {});

std::string format_results(const std::vector<CriterionResult>& rs);
nlohmann::json results_to_json(const std::vector<CriterionResult>& rs);

}  // namespace asc

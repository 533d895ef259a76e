#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdtensor/theorems.hpp"

namespace pdtensor {

/// Recipe of an encoded example: catalog ring plus named modules.
struct PaperInstance {
  std::string id;
  std::string ring_id;
  std::vector<std::pair<std::string, PresentedModule>> modules;

  const PresentedModule& module(std::string_view name) const;
};

std::vector<std::string> example_ids();
/// Throws AlgebraError for an unknown id.
PaperInstance paper_instance(std::string_view id);

/// Runs every assertion of the example, including agreement with the dense oracle.
Verdict run_example(std::string_view id);

/// Engine against oracle: dimensions of M, N, M (x) N, Tor_1 and Tor_2 in degrees up to `top`.
struct OracleComparison {
  bool agree = true;
  std::vector<std::string> mismatches;
  int from = 0;
  int top = 6;
};
OracleComparison oracle_compare(const PresentedModule& m, const PresentedModule& n, int top = 6);

/// Theorem checks run by `paper --all`.
struct TheoremCase {
  std::string label;
  std::string theorem_id;
  std::string ring_id;
  TheoremInputs inputs;
};
std::vector<TheoremCase> paper_theorem_cases();

}  // namespace pdtensor

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace invlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  int jobs = 0;
  std::uint64_t seed = 12345;
  std::string out_dir;  // when set, criterion 13 writes its reports here
};

// Runs the full acceptance suite; one result per criterion, in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

// Pretty-prints one pass/fail line per criterion; returns the failure count.
int print_acceptance(const std::vector<CriterionResult>& results);

}  // namespace invlab

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperlattice/enumerate.hpp"

namespace hyperlattice {

// Quick runs every check at a length that keeps the whole suite around two
// minutes on one core; full runs the complete printed prefixes.
enum class Scope { Quick, Full };

enum class Outcome { Pass, Mismatch, BudgetExceeded };

std::string to_string(Scope s);
Scope parse_scope(const std::string& s);
std::string to_string(Outcome o);

struct SuiteOptions {
  Scope scope = Scope::Quick;
  EnumerationOptions enumeration;
};

struct CheckOutcome {
  Outcome outcome = Outcome::Pass;
  std::string detail;
};

struct GoldenCheck {
  int criterion = 0;  // 1..9 for the acceptance criteria, 0 for other printed values
  std::string name;
  // Non-empty when the printed value is known not to be reproducible; the
  // check still runs and still reports a mismatch.
  std::string known_discrepancy;
  std::function<CheckOutcome(const SuiteOptions&)> run;
};

struct CheckRecord {
  int criterion = 0;
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::string known_discrepancy;
  double seconds = 0;
};

std::vector<GoldenCheck> golden_suite(Scope scope);

std::vector<CheckRecord> run_golden_suite(const SuiteOptions& opts,
                                          const std::function<void(const CheckRecord&)>& progress = {});

// Exit status for a finished report: 0 all pass, 2 any mismatch, 3 budget
// exhaustion without mismatches.
int golden_exit_code(const std::vector<CheckRecord>& records);

}  // namespace hyperlattice

#include "verify.hpp"

#include <cstdio>

#include "hyperlattice/serialize.hpp"

namespace hyperlattice::cli {

namespace {

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

}  // namespace

int run_verify(const SuiteOptions& opts, const std::string& format, std::ostream& out) {
  const bool text = format != "json";
  int pass = 0, fail = 0, budget = 0;
  auto records = run_golden_suite(opts, [&](const CheckRecord& r) {
    if (r.outcome == Outcome::Pass) ++pass;
    if (r.outcome == Outcome::Mismatch) ++fail;
    if (r.outcome == Outcome::BudgetExceeded) ++budget;
    if (!text) return;
    out << to_string(r.outcome) << "  [" << r.criterion << "] " << r.name << "  (" << seconds(r.seconds) << ")";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << "\n";
    if (r.outcome != Outcome::Pass && !r.known_discrepancy.empty())
      out << "      known discrepancy: " << r.known_discrepancy << "\n";
    out.flush();
  });
  const int code = golden_exit_code(records);
  if (text) {
    out << "scope " << to_string(opts.scope) << ": " << pass << " passed, " << fail << " mismatched, " << budget
        << " over budget\n";
  } else {
    json arr = json::array();
    for (const auto& r : records) {
      json j = {{"criterion", r.criterion}, {"name", r.name}, {"outcome", to_string(r.outcome)}, {"detail", r.detail}};
      if (!r.known_discrepancy.empty()) j["known_discrepancy"] = r.known_discrepancy;
      arr.push_back(j);
    }
    out << json{{"scope", to_string(opts.scope)}, {"exit_code", code}, {"checks", arr}}.dump(2) << "\n";
  }
  return code;
}

}  // namespace hyperlattice::cli

// One line per acceptance criterion, derived from the golden suite.
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "hyperlattice/golden.hpp"

using namespace hyperlattice;

namespace {

const std::map<int, std::string>& criterion_titles() {
  static const std::map<int, std::string> t = {
      {1, "Gram matrices equivalent to the printed ones"},
      {2, "determinants and modular levels"},
      {3, "dual quotient of L1"},
      {4, "theta series against printed prefixes"},
      {5, "L1 theta series as theta-function identity"},
      {6, "ribbon count, rank, norms, basis independence, kissing numbers"},
      {7, "harmonicity of root fields and Dirac projection"},
      {8, "SU2 examples"},
      {9, "enumerator agrees with a naive count"},
      {0, "other printed values and supporting checks"},
  };
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--scope" && i + 1 < argc) {
      opts.scope = parse_scope(argv[++i]);
    } else if (a == "--threads" && i + 1 < argc) {
      opts.enumeration.threads = std::stoi(argv[++i]);
    } else if (a == "--budget" && i + 1 < argc) {
      opts.enumeration.node_budget = static_cast<std::uint64_t>(std::stod(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--scope quick|full] [--threads N] [--budget NODES]\n";
      return 4;
    }
  }
  if (opts.scope == Scope::Full && opts.enumeration.node_budget == EnumerationOptions{}.node_budget)
    opts.enumeration.node_budget = 2'000'000'000'000ULL;

  std::map<int, std::vector<CheckRecord>> by_criterion;
  const auto records = run_golden_suite(opts, [](const CheckRecord& r) {
    std::fprintf(stderr, "  [%d] %-4s %s (%.1fs)\n", r.criterion, to_string(r.outcome).c_str(), r.name.c_str(),
                 r.seconds);
  });
  for (const auto& r : records) by_criterion[r.criterion].push_back(r);

  bool unexplained = false;
  std::cout << "acceptance scope=" << to_string(opts.scope) << " tolerance=exact\n";
  for (int c : {1, 2, 3, 4, 5, 6, 7, 8, 9, 0}) {
    const auto& rs = by_criterion[c];
    int pass = 0;
    std::vector<const CheckRecord*> failed;
    for (const auto& r : rs) {
      if (r.outcome == Outcome::Pass)
        ++pass;
      else
        failed.push_back(&r);
    }
    const std::string label = c ? "criterion " + std::to_string(c) : "extra";
    std::cout << (failed.empty() ? "PASS" : "FAIL") << "  " << label << ": " << criterion_titles().at(c) << "  ("
              << pass << "/" << rs.size() << " checks";
    if (c == 4 && opts.scope == Scope::Quick) std::cout << ", quick-scope prefixes";
    std::cout << ")\n";
    for (const auto* r : failed) {
      std::cout << "      " << to_string(r->outcome) << ": " << r->name << ": " << r->detail << "\n";
      if (!r->known_discrepancy.empty())
        std::cout << "      known discrepancy: " << r->known_discrepancy << "\n";
      if (r->known_discrepancy.empty() || r->outcome == Outcome::BudgetExceeded) unexplained = true;
    }
  }
  std::cout << (unexplained ? "unexplained failures present\n" : "all failures are documented discrepancies\n");
  return unexplained ? 1 : 0;
}

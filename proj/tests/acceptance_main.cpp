// Verification gate: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit 0 iff all pass within budget.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "braidprob/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  auto results = braidprob::run_acceptance(ids);
  bool all = true;
  bool in_budget = true;
  for (const auto& r : results) {
    std::puts(braidprob::format_acceptance_line(r).c_str());
    all = all && r.pass;
    in_budget = in_budget && r.seconds < r.budget_seconds;
  }
  if (!all) {
    std::puts("acceptance: FAILED");
    return 1;
  }
  if (!in_budget) {
    std::puts("acceptance: passed but over a time budget");
    return 2;
  }
  std::puts("acceptance: all criteria passed");
  return 0;
}

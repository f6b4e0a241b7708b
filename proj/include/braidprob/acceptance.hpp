#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace braidprob {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;
  std::string detail;  // one-line summary; failure notes when failing
};

// Runs the verification criteria behind verify-paper (all twelve when
// ids is empty).
// seed drives the randomized corpora; results are deterministic per seed.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {},
                                            uint64_t seed = 20080905);

// "PASS criterion 3: dual-oracle agreement ..." lines, one per criterion.
std::string format_acceptance_line(const CriterionResult& r);

}  // namespace braidprob

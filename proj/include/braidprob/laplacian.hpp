#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidprob/bigint.hpp"
#include "braidprob/rational.hpp"

namespace braidprob {

enum class WalkGroup {
  B3_gamma,        // alphabet gamma_1^{+-1}, gamma_2^{+-1} in B_3
  F2,              // free alphabet a^{+-1}, b^{+-1}
  B3_gamma_squared,  // alphabet gamma_1^{+-2}, gamma_2^{+-2} in B_3
  Z_single,        // alphabet gamma_1^{+-1} only (one Haar unitary)
};

struct WalkLimits {
  int max_n_b3 = 14;
  int max_n_f2 = 20;
  size_t frontier_cap = 30000000;  // budget guard for the B_3 frontier
};

// Distribution of the random walk over canonical group elements after
// `length` steps; counts sum to (alphabet size)^length.
class WalkCounter {
 public:
  explicit WalkCounter(WalkGroup group, WalkLimits limits = {});

  WalkGroup group() const { return group_; }
  int length() const { return length_; }
  const std::map<std::string, BigInt>& frontier() const { return frontier_; }
  int alphabet_size() const;

  void step();
  BigInt identity_count() const;
  BigInt total_count() const;

 private:
  WalkGroup group_;
  WalkLimits limits_;
  int length_ = 0;
  std::map<std::string, BigInt> frontier_;  // canonical key (or free word) -> count
  std::string identity_key_;
};

// Number of length-n words over the group's 4-letter alphabet (2 for
// Z_single) that represent the identity. Exact; breadth-first dynamic
// programming over canonical elements. Throws std::invalid_argument past the
// configured maximum and std::runtime_error past the frontier cap.
BigInt count_trivial_words(WalkGroup group, int n, const WalkLimits& limits = {});

// All counts 0..max_n in one sweep (one DP pass).
std::vector<BigInt> count_trivial_words_upto(WalkGroup group, int max_n,
                                             const WalkLimits& limits = {});

// Independent oracle: raw enumeration of all 4^n words (n <= 9).
BigInt count_trivial_words_raw(WalkGroup group, int n);

// Exact truncated power series with rational coefficients.
struct PowerSeries {
  std::vector<Rational> coefficients;  // degree 0 .. truncation
  int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Taylor expansion of (2 sqrt(1 - 12 z^2) - 1) / (1 - 16 z^2), the moment
// generating function of the free Laplacian walk counts; computed by the
// rational binomial series for the square root and the geometric series for
// the denominator. max_degree <= 64.
PowerSeries kesten_series(int max_degree);

enum class MomentNormalization { count, half };

// normalization = count: raw identity-word counts; half: count(n) / 2^n,
// the moments of the (1/2)-normalized Laplacian.
std::vector<Rational> laplacian_moments(WalkGroup group, int max_n,
                                        MomentNormalization normalization,
                                        const WalkLimits& limits = {});

struct KestenComparison {
  bool match = true;
  int max_n = 0;
  std::vector<BigInt> series_coefficients;  // even degrees 0..max_n
  std::vector<BigInt> walk_counts;
  // The closed form is labelled with the 1/2-normalized Laplacian but its
  // integer expansion equals the raw counts; both conventions are reported.
  std::vector<Rational> half_normalized_moments;
};

// Asserts kesten_series coefficients equal count_trivial_words(F2, n) for
// all even n <= max_n (max_n <= 20, even).
KestenComparison compare_with_kesten(int max_n, const WalkLimits& limits = {});

}  // namespace braidprob

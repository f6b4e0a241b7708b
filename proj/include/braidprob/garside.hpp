#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidprob/braid_word.hpp"

namespace braidprob {

// A positive simple factor of B_n: each strand pair crosses at most once,
// so the factor is determined by its permutation (image[s] = final position
// of the strand starting at position s).
struct PermutationBraid {
  std::vector<int> image;

  friend bool operator==(const PermutationBraid& a, const PermutationBraid& b) {
    return a.image == b.image;
  }
};

// Garside left-greedy normal form Delta^p A_1 ... A_k at a given ambient
// strand count. Factors exclude the identity and Delta; consecutive factors
// are left-weighted. Unique per group element and ambient.
struct LeftNormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<PermutationBraid> factors;

  bool trivial() const { return delta_power == 0 && factors.empty(); }
  friend bool operator==(const LeftNormalForm& a, const LeftNormalForm& b) {
    return a.strands == b.strands && a.delta_power == b.delta_power && a.factors == b.factors;
  }
};

using CanonicalKey = std::string;

// Incremental normal-form accumulator at a fixed ambient strand count.
// Right-multiplication by one generator renormalizes eagerly; this is the
// workhorse behind the word-problem oracle, the walk-count DP and the
// moment checker.
class NfWord {
 public:
  static constexpr int kMaxStrands = 32;

  explicit NfWord(int strands);
  // Rebuild the accumulator from a key produced by key() at the same ambient.
  static NfWord from_key(int strands, const std::string& key);

  int strands() const { return strands_; }
  int delta_power() const { return delta_power_; }
  size_t canonical_length() const { return factors_.size(); }
  bool trivial() const { return delta_power_ == 0 && factors_.empty(); }

  void mul_sigma(int index, int sign);
  // Artin words only; gamma words must be converted by the caller.
  void mul_word(const BraidWord& w);

  // Canonical byte encoding of (delta_power, factors) at this ambient.
  std::string key() const;
  LeftNormalForm to_normal_form() const;

  friend bool operator==(const NfWord& a, const NfWord& b);

 private:
  using Perm = std::array<uint8_t, kMaxStrands>;

  int strands_;
  int delta_power_ = 0;
  int twist_ = 0;  // stored factor j means tau^twist(factor j)
  std::vector<Perm> factors_;

  Perm transposition(int index) const;
  Perm w0() const;
  Perm flip(const Perm& p) const;
  uint32_t starting_set(const Perm& p) const;
  uint32_t finishing_set(const Perm& p) const;
  bool is_identity(const Perm& p) const;
  bool is_w0(const Perm& p) const;
  bool left_weight_pair(Perm& a, Perm& b);
  void push_factor(Perm f);
  void cascade_from(size_t j);
};

// Left-greedy normal form of w; gamma words are converted first. If n is
// given it must cover every letter index; otherwise the minimal ambient
// (at least 2 strands) is used.
LeftNormalForm normal_form(const BraidWord& w, std::optional<int> n = std::nullopt);

bool is_trivial(const BraidWord& w);

// Group-element equality (computed at the common ambient; agrees with
// canonical_key comparison).
bool equal(const BraidWord& a, const BraidWord& b);

// Stabilization-invariant key: the unentangled top strands are removed down
// to the minimal ambient B_{tw+1} and the normal form there is encoded
// together with tw.
CanonicalKey canonical_key(const BraidWord& w);

// Dehornoy handle reduction; the independent second triviality oracle.
// Returns a handle-free word equal to w; w is trivial iff the result is
// empty. Throws std::runtime_error if max_steps is exceeded (handle
// reduction provably terminates, so that signals a bug).
BraidWord handle_reduce(const BraidWord& w, size_t max_steps = 1000000);

// tw(w): minimal m with w in B_{m+1}; 0 iff trivial. Decided through the
// relative-commutant characterization: for w in B_N, w lies in B_{m+1} iff
// it commutes with sigma_{m+2}, ..., sigma_{N+1}.
int total_width(const BraidWord& w);

// Number of distinct canonical keys among {sh_m^k(tau) : 0 <= k <= K}.
int64_t shifted_orbit_distinct(const BraidWord& tau, int m, int K);

// w as a word of B_{n} rewritten over sigma_1..sigma_{n-2} by deleting the
// unentangled top strand; requires the element to lie in B_{n-1}.
BraidWord remove_top_strand(const BraidWord& w, int n);

}  // namespace braidprob

#pragma once

#include <cstdint>
#include <vector>

#include "braidprob/braid_word.hpp"
#include "braidprob/group_algebra.hpp"

namespace braidprob {

// An n-tuple i: [n] -> N_0 indexing mixed moments.
struct IndexTuple {
  std::vector<int> entries;

  size_t order() const { return entries.size(); }
  friend bool operator==(const IndexTuple& a, const IndexTuple& b) {
    return a.entries == b.entries;
  }
};

enum class EquivalenceKind { translation, order, symmetric };

// translation: i = theta^k j or theta^k i = j;
// order: i = pi of j with pi order-preserving on j's range;
// symmetric: i = pi of j for some finite permutation.
bool equivalent(const IndexTuple& i, const IndexTuple& j, EquivalenceKind rel);

// A chain i = i_1, ..., i_K = j of order-equivalent tuples in which
// consecutive tuples differ on a single level set moved by +-1 onto a value
// not otherwise in the image (the elementary moves of the spreadability
// argument). Throws if i, j are not order-equivalent.
std::vector<IndexTuple> order_equiv_chain(const IndexTuple& i, const IndexTuple& j);

enum class SequenceKind {
  ArtinAlpha,   // iota_n = alpha^n|_{L(B_2)},  alpha = shift in the Artin generators
  GammaBeta,    // iota_n = beta^n|_{L(B_2)},   beta = sh_1, gamma_1 -> gamma_{n+1}
  InverseRho,   // iota_n = Ad L(sigma_n^-1 ... sigma_1^-1)
};

struct SequenceSpec {
  SequenceKind kind = SequenceKind::GammaBeta;
  std::vector<ExactElement> seed_elements;  // words in the index-1 generator

  // g, g^-1, g^2, g + g^-1 over the sequence's generator
  static std::vector<ExactElement> default_battery(SequenceKind kind);
};

// iota_n applied to an element of the initial algebra (all letter indices 1).
ExactElement iota_image(const SequenceSpec& spec, int n, const ExactElement& x);

// The representation conjugation rho(tau) of the given sequence applied to a
// group-algebra element: ArtinAlpha uses Ad L_tau, GammaBeta uses
// Ad L_{sh(inv tau)}, InverseRho uses Ad L_{inv tau}.
ExactElement apply_spec_braid(const SequenceSpec& spec, const BraidWord& tau,
                              const ExactElement& x);

struct MomentQuery {
  IndexTuple tuple;
  std::vector<ExactElement> arguments;
};

// psi_iota[i; a] = trace(iota_{i(1)}(a_1) ... iota_{i(n)}(a_n)), exact.
RatComplex moment(const SequenceSpec& spec, const MomentQuery& q);

// A braid tau with rho(tau)(iota[i; a]) = iota[j; a], composed from the
// elementary sigma-moves along order_equiv_chain(i, j).
BraidWord implementing_braid(const IndexTuple& i, const IndexTuple& j);

struct SymmetryWitness {
  IndexTuple lhs, rhs;
  std::vector<int> battery_combo;  // battery index per slot
  RatComplex lhs_value, rhs_value;
};

struct SymmetryReport {
  bool pass = true;
  std::vector<SymmetryWitness> witnesses;  // first counterexample when failing
  uint64_t classes_checked = 0;
  uint64_t comparisons = 0;
};

// Exhaustive moment-equality scan over all rel-equivalent tuple pairs with
// order <= max_order and entries <= index_bound, arguments running over all
// battery combinations. Deterministic scan order (order ascending, class
// representatives lexicographic); stops at the first counterexample.
SymmetryReport check_symmetry(const SequenceSpec& spec, EquivalenceKind rel, int max_order,
                              int index_bound, const std::vector<ExactElement>& battery);

// Commutation of a generator through the descending product:
// sigma_n (sigma_m ... sigma_1) equals
// (sigma_m ... sigma_1) sigma_{n+1} for 0 != n < m and
// (sigma_m ... sigma_1) sigma_n for n > m+1; n = 0 is trivial.
// Throws std::invalid_argument when n is in {m, m+1}.
bool descending_product_commutation(int n, int m);

}  // namespace braidprob

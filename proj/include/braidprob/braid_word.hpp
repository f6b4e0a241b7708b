#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace braidprob {

enum class Presentation : uint8_t { Artin, SqrtFree };

// One signed generator letter: sigma_i or gamma_i with index >= 1.
// Index 0 (the group unit) is never a letter; the unit is the empty word.
struct Letter {
  Presentation presentation = Presentation::Artin;
  int index = 1;
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(Presentation p, int idx, int s);

  Letter inverse() const { return Letter(presentation, index, -sign); }
  friend bool operator==(const Letter& a, const Letter& b) {
    return a.presentation == b.presentation && a.index == b.index && a.sign == b.sign;
  }
};

// Immutable sequence of letters sharing one presentation tag. All operations
// return fresh words.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(Presentation p) : presentation_(p) {}
  BraidWord(Presentation p, std::vector<Letter> letters,
            std::optional<int> declared_strands = std::nullopt);

  Presentation presentation() const { return presentation_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }
  std::optional<int> declared_strands() const { return declared_strands_; }

  // Largest letter index, 0 for the empty word.
  int max_index() const;
  // Ambient strand count: declared_strands if set, else max_index()+1 (>= 2).
  int ambient_strands() const;

  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.presentation_ == b.presentation_ && a.letters_ == b.letters_;
  }

  static BraidWord sigma(std::vector<int> signed_indices);
  static BraidWord gamma(std::vector<int> signed_indices);

 private:
  Presentation presentation_ = Presentation::Artin;
  std::vector<Letter> letters_;
  std::optional<int> declared_strands_;
};

// Free cancellation of adjacent inverse pairs; same group element.
BraidWord free_reduce(const BraidWord& w);

// Group inverse: reversed order, flipped signs.
BraidWord invert(const BraidWord& w);

// The automorphism inv: flips every sign in place (sigma_i -> sigma_i^{-1}).
BraidWord inv_map(const BraidWord& w);

BraidWord concat(const BraidWord& a, const BraidWord& b);

// Sum of letter signs; the abelianization homomorphism to Z.
int64_t exponent_sum(const BraidWord& w);

// Image under the canonical epimorphism to S_n acting on positions 0..n-1;
// perm[s] = final position of the strand starting at s. Works for both
// presentations (gamma_k maps to the transposition (0 k)).
// Throws std::invalid_argument if a letter needs more than n strands.
std::vector<int> underlying_permutation(const BraidWord& w, int n);

// Composition convention matching underlying_permutation's homomorphism law:
// apply p first, then q.
std::vector<int> compose_permutations(const std::vector<int>& p, const std::vector<int>& q);

// sh^k: every index incremented by k. Artin words only.
BraidWord shift(const BraidWord& w, int k);

// sh_m(w) = sigma_m ... sigma_1 sh(w) sigma_1^{-1} ... sigma_m^{-1}, free-reduced.
BraidWord m_shift(const BraidWord& w, int m);

// Letterwise substitution gamma_k = (sigma_1..sigma_{k-1}) sigma_k
// (sigma_{k-1}^{-1}..sigma_1^{-1}) and its inverse formula
// sigma_k = (gamma_1^{-1}..gamma_{k-1}^{-1}) gamma_k (gamma_{k-1}..gamma_1);
// output is free-reduced. Throws on wrong source presentation.
BraidWord gamma_to_sigma(const BraidWord& w);
BraidWord sigma_to_gamma(const BraidWord& w);

// gamma~_i := inv(gamma_i^{-1}), i.e. the letter-reversal of gamma_i's
// sigma-word; returns it as an Artin word.
BraidWord gamma_tilde_as_sigma(int index, int sign = 1);

enum class FundamentalKind { delta, Delta, Delta_in_gamma, pyramid_up, pyramid_down };

// delta(n) = sigma_{n-1}...sigma_1
// Delta(n) = (sigma_1..sigma_{n-1})(sigma_1..sigma_{n-2})...(sigma_1)
// Delta_in_gamma(n) = (gamma_{n-1}..gamma_1)(gamma_{n-2}..gamma_1)...(gamma_1)
// pyramid_up(m) = sigma_1..sigma_{m-1} sigma_m sigma_{m-1}..sigma_1
// pyramid_down(m) = sigma_m..sigma_2 sigma_1 sigma_2..sigma_m
// Throws std::invalid_argument for n < 2.
BraidWord fundamental_braid(FundamentalKind kind, int n);

enum class RelationKind { B1, B2, EB, EBtilde, SergiescuPair, SergiescuTriple };

struct PresentationRelation {
  RelationKind kind;
  std::vector<int> parameters;  // the indices instantiating the relation
  BraidWord lhs, rhs;
};

// All instances of the given relation family inside B_n, words built verbatim
// from the defining formulas. EBtilde instances are realized as Artin words
// via gamma_tilde_as_sigma.
std::vector<PresentationRelation> relation_instances(RelationKind kind, int n);

// Text word format: "sigma: 1 2 -1" / "gamma: 3 -3"; empty word is the bare
// prefix. Throws std::invalid_argument on malformed input.
BraidWord parse_word(const std::string& text);
std::string format_word(const BraidWord& w);

}  // namespace braidprob

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidprob/matrix.hpp"

namespace braidprob {

// Verdicts carry their numerical residual: pass below 1e-8, hard fail above
// 1e-4, flagged for review in between.
struct Verdict {
  bool pass = false;
  bool flagged = false;
  double residual = 0.0;

  static Verdict from_residual(double r) {
    return Verdict{r < 1e-8, r >= 1e-8 && r <= 1e-4, r};
  }
};

// A matrix algebra with a state: the span is kept as an HS-orthonormal basis
// closed under products (completed on construction) and star.
class FiniteProbSpace {
 public:
  // Completes the generating set under multiplication and star until the
  // span stabilizes (capped at dim^2 basis elements).
  FiniteProbSpace(size_t dim, const std::vector<DenseMatrix>& generators,
                  std::optional<DenseMatrix> density = std::nullopt, double tol = 1e-9);

  size_t dim() const { return dim_; }
  const std::vector<DenseMatrix>& basis() const { return basis_; }
  std::complex<double> state(const DenseMatrix& x) const;

 private:
  size_t dim_;
  std::vector<DenseMatrix> basis_;
  std::optional<DenseMatrix> density_;
};

// Star-closed unital span inside a space, kept orthonormal and completed
// under multiplication.
struct Subalgebra {
  std::vector<DenseMatrix> basis;

  static Subalgebra generated(size_t dim, const std::vector<DenseMatrix>& generators,
                              double tol = 1e-9);
  static Subalgebra scalars(size_t dim);
  size_t span_dim() const { return basis.size(); }
};

// psi-preserving conditional expectation: the HS-orthogonal projection onto
// the subalgebra span.
class CondExpectation {
 public:
  CondExpectation(const FiniteProbSpace& space, Subalgebra target);

  DenseMatrix apply(const DenseMatrix& x) const;
  const Subalgebra& target() const { return target_; }

  // max residuals of E^2 = E, E(1) = 1, state-preservation and the module
  // property E(a x b) = a E(x) b over the space's basis
  double self_check(const FiniteProbSpace& space) const;

 private:
  Subalgebra target_;
};

// Throws std::invalid_argument when sub is not star-closed, misses the unit,
// or is not contained in the space's algebra span.
CondExpectation conditional_expectation(const FiniteProbSpace& space, const Subalgebra& sub);

struct CommutingSquareReport {
  Verdict criterion_iv;  // E_{N1} E_{N2} = E_N
  Verdict criterion_v;   // E_{N1} E_{N2} = E_{N2} E_{N1}
  bool consistent() const { return criterion_iv.pass == criterion_v.pass; }
  bool pass() const { return criterion_iv.pass && criterion_v.pass; }
};

// Checks the commuting-square criteria on the space's basis. Preconditions
// N <= N1, N <= N2 (span containment) are validated.
CommutingSquareReport is_commuting_square(const FiniteProbSpace& space, const Subalgebra& n,
                                          const Subalgebra& n1, const Subalgebra& n2);

struct IndependenceReport {
  Verdict verdict;
  size_t pairs_checked = 0;
  // worst pair when failing
  std::string note;
};

// E_N(x y) = E_N(x) E_N(y) for x in N1 v N, y in N2 v N, checked on the
// battery (defaults to the spanning bases of the joins).
IndependenceReport check_independence(const FiniteProbSpace& space, const Subalgebra& n,
                                      const Subalgebra& n1, const Subalgebra& n2,
                                      const std::vector<DenseMatrix>& battery_left = {},
                                      const std::vector<DenseMatrix>& battery_right = {});

// {x in span : [x, s] = 0 for all s in set}, via the nullspace of the
// stacked commutator operator on the space's basis.
Subalgebra relative_commutant(const FiniteProbSpace& space,
                              const std::vector<DenseMatrix>& set, double tol = 1e-8);

bool same_span(const Subalgebra& a, const Subalgebra& b, double tol = 1e-8);

struct BernoulliReport {
  Verdict verdict;
  bool order_only = false;  // true when only interval pairs were checked
  size_t pairs_checked = 0;
};

// Checks N-independence of the blocks alpha^k(generator) for index sets
// I, J within [0, max_shift]: full mode uses all disjoint nonempty pairs,
// ordered mode only interval pairs I < J. N defaults to the relative
// commutant of the u's inside the generated space.
BernoulliReport bernoulli_factorization_check(const FiniteProbSpace& space,
                                              const std::vector<DenseMatrix>& us,
                                              const std::vector<int>& signs,
                                              const Subalgebra& generator, int max_shift,
                                              bool full, double tol = 1e-8);

}  // namespace braidprob

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidprob/matrix.hpp"
#include "braidprob/rational.hpp"

namespace braidprob {

// Gaussian (generalized Clifford) representation data: clock/shift legs
// e_0..e_{n-1} in dimension p^n with e_i^p = 1 and e_i e_j = omega^2 e_j e_i
// for i < j, and the braid unitaries u_i = p^{-1/2} sum_k omega^{k^2} v_i^k,
// v_i = omega e_{i-1}* e_i.
struct GaussianRep {
  int p = 2;
  int strands = 2;
  std::complex<double> omega;
  std::vector<DenseMatrix> e;  // n matrices
  std::vector<DenseMatrix> u;  // n-1 matrices, u[i] is u_{i+1}
};

size_t max_matrix_dim();  // BRAIDPROB_MAX_DIM override, default 4096

// omega = exp(2 pi i / p) for odd p, exp(pi i / p) for even p.
std::complex<double> gaussian_omega(int p);

// Builds the representation and validates the defining relations to
// tolerance; throws std::invalid_argument past the dimension budget and
// std::runtime_error on a residual failure (construction bug).
GaussianRep build_gaussian(int p, int n, double tol = 1e-9);

// (tr(e1 e2 e1* e2*), tr(e2 e1 e2* e1*)) normalized; equal iff p = 2.
std::pair<std::complex<double>, std::complex<double>> gaussian_nonexchangeability_trace(
    int p, int n);

// Both leg-embedded Yang-Baxter identities in dimension d^3 for an R-breve
// of dimension d^2 (and the flipped R = P R-breve form).
bool check_ybe(const DenseMatrix& r_breve, double tol = 1e-9);

// The 4x4 R-breve of the omega-shift example.
DenseMatrix r_matrix_omega(std::complex<double> omega);
// u_i = R-breve embedded at tensor legs (i-1, i) of (C^p)^{otimes legs}.
std::vector<DenseMatrix> r_matrix_braid_unitaries(const DenseMatrix& r_breve, int legs);
// Non-homogeneous variant: u_i built from r_breve with omega = omegas[i-1].
std::vector<DenseMatrix> r_matrix_braid_unitaries_mixed(
    const std::vector<std::complex<double>>& omegas, int legs);

// Ad(u_1^{e_1} ... u_{level+1}^{e_{level+1}})(x): the finite truncation of
// the product endomorphism alpha_eps on level-`level` observables.
// signs empty means all +1. Throws if fewer than level+1 factors are given.
DenseMatrix product_endomorphism(const std::vector<DenseMatrix>& us,
                                 const std::vector<int>& signs, const DenseMatrix& x,
                                 int level);

// alpha_eps^times(x) for x supported on leg 0: iterates the endomorphism,
// raising the truncation level by one per application (the braid relations
// are NOT assumed, so this is the only generally valid composition).
DenseMatrix product_endomorphism_iterated(const std::vector<DenseMatrix>& us,
                                          const std::vector<int>& signs, const DenseMatrix& x,
                                          int times);

// Residual diagnostics for the braid relations of a list of unitaries.
struct BraidRelationReport {
  double max_b1_residual = 0.0;
  double max_b2_residual = 0.0;
  double max_unitarity_residual = 0.0;
  bool pass(double tol = 1e-9) const {
    return max_b1_residual < tol && max_b2_residual < tol && max_unitarity_residual < tol;
  }
};
BraidRelationReport check_braid_relations(const std::vector<DenseMatrix>& us);

// Perturbed representation {g u_i} per the cocycle construction: g must
// commute with every u_i (throws otherwise); reports whether the braid
// relations survive and flags the non-generating phenomenon when all Ad(u_i)
// are N-periodic while g^N != 1.
struct PerturbedRep {
  std::vector<DenseMatrix> us;
  BraidRelationReport relations;
  int ad_period = 0;  // smallest N <= 8 with Ad(u_i)^N = id for all i, else 0
  bool non_generating_flag = false;
};
PerturbedRep perturbed_rep(const std::vector<DenseMatrix>& us, const DenseMatrix& g,
                           double tol = 1e-9);

// ---- Hecke algebra, T-basis over permutations of n points ----

// polynomial in q with rational coefficients
using QPolynomial = std::vector<Rational>;  // degree-indexed, trimmed

QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b);
bool qpoly_is_zero(const QPolynomial& a);
Rational qpoly_eval(const QPolynomial& a, const Rational& q);
std::string qpoly_to_string(const QPolynomial& a);

// Finitely supported map permutation -> polynomial; permutations are
// one-line arrays over 0..n-1.
class HeckeElement {
 public:
  using Perm = std::vector<int>;

  static HeckeElement unit(int n);
  static HeckeElement generator(int n, int i);  // T_{s_i}, 1 <= i <= n-1
  static HeckeElement basis(Perm w);

  const std::map<Perm, QPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Perm& w, const QPolynomial& c);

  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

 private:
  std::map<Perm, QPolynomial> terms_;
};

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const QPolynomial& c, const HeckeElement& a);
// T-basis product in H_n; n <= 7 (basis size n!).
HeckeElement hecke_product(const HeckeElement& a, const HeckeElement& b, int n);

struct HeckeRelationReport {
  bool quadratic = true;     // g_i^2 = (q-1) g_i + q
  bool commutation = true;   // g_i g_j = g_j g_i, |i-j| >= 2
  bool braid = true;         // g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}
  bool q1_degeneration = true;  // q = 1 products match permutation composition
  bool pass() const { return quadratic && commutation && braid && q1_degeneration; }
};
HeckeRelationReport hecke_check_relations(int n);

}  // namespace braidprob

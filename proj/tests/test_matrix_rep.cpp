#include <stdexcept>

#include "braidprob/matrix_rep.hpp"
#include "doctest.h"

using namespace braidprob;
using cdouble = std::complex<double>;

TEST_CASE("gaussian representation relations and braid unitaries") {
  for (int p : {2, 3, 4}) {
    for (int n : {2, 3}) {
      GaussianRep rep = build_gaussian(p, n);  // throws on any relation failure
      CHECK(rep.u.size() == static_cast<size_t>(n - 1));
    }
  }
  GaussianRep rep = build_gaussian(3, 3);
  BraidRelationReport rel = check_braid_relations(rep.u);
  CHECK(rel.max_b1_residual < 1e-9);
  CHECK(rel.max_unitarity_residual < 1e-9);
}

TEST_CASE("Ad(u_1) shifts e_0 to e_1") {
  for (int p : {2, 3, 4, 5}) {
    GaussianRep rep = build_gaussian(p, 3);
    DenseMatrix moved = rep.u[0] * rep.e[0] * rep.u[0].adjoint();
    CHECK(DenseMatrix::normalized_distance(moved, rep.e[1]) < 1e-9);
  }
}

TEST_CASE("product endomorphism shifts the whole chain") {
  GaussianRep rep = build_gaussian(3, 4);
  for (int i = 0; i + 1 < rep.strands - 1; ++i) {
    DenseMatrix img = product_endomorphism(rep.u, {}, rep.e[i], i);
    CHECK(DenseMatrix::normalized_distance(img, rep.e[i + 1]) < 1e-9);
  }
}

TEST_CASE("gaussian nonexchangeability traces") {
  auto [t12, t21] = gaussian_nonexchangeability_trace(3, 3);
  cdouble w = gaussian_omega(3);
  CHECK(std::abs(t12 - w * w) < 1e-9);
  CHECK(std::abs(t21 - std::conj(w * w)) < 1e-9);
  CHECK(std::abs(t12 - t21) > 0.1);
  auto [s12, s21] = gaussian_nonexchangeability_trace(2, 3);
  CHECK(std::abs(s12 - cdouble{-1.0, 0.0}) < 1e-9);
  CHECK(std::abs(s12 - s21) < 1e-9);  // p = 2 is exchangeable
  auto [f12, f21] = gaussian_nonexchangeability_trace(4, 3);
  CHECK(std::abs(std::abs(f12) - 1.0) < 1e-9);
  CHECK(std::abs(f12 - f21) > 0.1);
}

TEST_CASE("gaussian spectra are uniform over the p-th roots of unity") {
  for (int p : {2, 3, 4}) {
    GaussianRep rep = build_gaussian(p, 3);
    for (const DenseMatrix& e : rep.e) {
      DenseMatrix pow = DenseMatrix::identity(e.dim());
      for (int k = 1; k < p; ++k) {
        pow = pow * e;
        CHECK(std::abs(pow.normalized_trace()) < 1e-9);  // tr e^k = 0, k != 0 mod p
      }
    }
  }
}

TEST_CASE("PR locality: distant unitaries commute with low observables") {
  GaussianRep rep = build_gaussian(2, 5);
  // u_{k} for k >= n+2 commutes with alg(e_0..e_n): test n = 0, 1
  for (int n = 0; n <= 1; ++n) {
    for (size_t k = n + 2; k <= rep.u.size(); ++k) {
      const DenseMatrix& u = rep.u[k - 1];
      for (int i = 0; i <= n; ++i) {
        DenseMatrix lhs = u * rep.e[i];
        DenseMatrix rhs = rep.e[i] * u;
        CHECK(DenseMatrix::normalized_distance(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("yang-baxter check on the omega R-matrix family") {
  for (cdouble w : {cdouble{1, 0}, cdouble{-1, 0}, cdouble{0, 1}}) {
    CHECK(check_ybe(r_matrix_omega(w)));
  }
  CHECK(check_ybe(DenseMatrix::identity(4)));
  // scaling the (4,4)-entry keeps YBE (the family solves it for any omega);
  // a genuine violation needs a structural corruption
  DenseMatrix scaled = r_matrix_omega({1, 0});
  scaled.at(3, 3) = {2.0, 0.0};
  CHECK(check_ybe(scaled));
  DenseMatrix broken = r_matrix_omega({1, 0});
  broken.at(1, 1) = {0.5, 0.0};
  CHECK_FALSE(check_ybe(broken));
  CHECK_THROWS_AS(check_ybe(DenseMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("R-matrix braid unitaries satisfy the relations") {
  for (cdouble w : {cdouble{1, 0}, cdouble{-1, 0}, cdouble{0, 1}}) {
    auto us = r_matrix_braid_unitaries(r_matrix_omega(w), 4);
    CHECK(us.size() == 3);
    CHECK(check_braid_relations(us).pass(1e-9));
  }
}

TEST_CASE("mixed omega shift exposes the 4th order moment failure") {
  // omega_1 = 1 (tensor flip), omega_2 = -1 (CAR shift)
  auto us = r_matrix_braid_unitaries_mixed({cdouble{1, 0}, cdouble{-1, 0}}, 3);
  DenseMatrix x(2);
  x.at(0, 1) = {1.0, 0.0};
  x.at(1, 0) = {1.0, 0.0};
  DenseMatrix one2 = DenseMatrix::identity(2);
  DenseMatrix x0 = DenseMatrix::kron(DenseMatrix::kron(x, one2), one2);
  DenseMatrix a1 = product_endomorphism_iterated(us, {}, x0, 1);
  // alpha(x) = 1 ox x
  DenseMatrix expect1 = DenseMatrix::kron(DenseMatrix::kron(one2, x), one2);
  CHECK(DenseMatrix::normalized_distance(a1, expect1) < 1e-12);
  DenseMatrix a2 = product_endomorphism_iterated(us, {}, x0, 2);
  // [x alpha(x)]^2 = 1 and [x alpha^2(x)]^2 = -1
  DenseMatrix s1 = x0 * a1;
  DenseMatrix s2 = x0 * a2;
  DenseMatrix id8 = DenseMatrix::identity(8);
  CHECK(DenseMatrix::normalized_distance(s1 * s1, id8) < 1e-12);
  CHECK(DenseMatrix::normalized_distance(s2 * s2, cdouble{-1.0, 0.0} * id8) < 1e-12);
  CHECK(std::abs((s1 * s1).normalized_trace() - cdouble{1, 0}) < 1e-12);
  CHECK(std::abs((s2 * s2).normalized_trace() - cdouble{-1, 0}) < 1e-12);
}

TEST_CASE("product endomorphism argument checks") {
  auto us = r_matrix_braid_unitaries(r_matrix_omega({1, 0}), 3);
  DenseMatrix x = DenseMatrix::identity(8);
  CHECK_THROWS_AS(product_endomorphism(us, {}, x, 5), std::invalid_argument);
}

TEST_CASE("perturbed representation and the non-generating flag") {
  // tensor flips on three 2-dim legs with a Xerox automorphism of order 4
  auto us = r_matrix_braid_unitaries(r_matrix_omega({1, 0}), 3);
  DenseMatrix g0(2);
  g0.at(0, 0) = {1.0, 0.0};
  g0.at(1, 1) = {0.0, 1.0};  // diag(1, i), order 4
  DenseMatrix g = DenseMatrix::kron(DenseMatrix::kron(g0, g0), g0);
  PerturbedRep rep = perturbed_rep(us, g);
  CHECK(rep.relations.pass(1e-9));
  CHECK(rep.ad_period == 2);  // flips square to one
  CHECK(rep.non_generating_flag);

  // identity perturbation keeps everything and raises no flag
  PerturbedRep trivial = perturbed_rep(us, DenseMatrix::identity(8));
  CHECK(trivial.relations.pass(1e-9));
  CHECK_FALSE(trivial.non_generating_flag);

  // scalar phase with lambda^2 != 1 also raises the flag
  DenseMatrix lam = cdouble{0.0, 1.0} * DenseMatrix::identity(8);
  PerturbedRep scalar = perturbed_rep(us, lam);
  CHECK(scalar.relations.pass(1e-9));
  CHECK(scalar.non_generating_flag);

  // non-commuting g is rejected
  GaussianRep gr = build_gaussian(2, 3);
  CHECK_THROWS_AS(perturbed_rep(gr.u, gr.e[0]), std::invalid_argument);
}

TEST_CASE("dimension budget is enforced") {
  CHECK_THROWS_AS(build_gaussian(2, 13), std::invalid_argument);  // 8192 > 4096
  CHECK_THROWS_AS(build_gaussian(4, 7), std::invalid_argument);
}

TEST_CASE("hecke relations hold exactly and degenerate at q = 1") {
  for (int n = 3; n <= 5; ++n) {
    HeckeRelationReport rep = hecke_check_relations(n);
    CHECK(rep.quadratic);
    CHECK(rep.commutation);
    CHECK(rep.braid);
    CHECK(rep.q1_degeneration);
  }
}

TEST_CASE("hecke T-basis product rules") {
  int n = 4;
  HeckeElement t1 = HeckeElement::generator(n, 1);
  HeckeElement sq = hecke_product(t1, t1, n);
  // T_s^2 = (q-1) T_s + q T_e
  HeckeElement expect = hecke_add(hecke_scale({Rational(-1), Rational(1)}, t1),
                                  hecke_scale({Rational(0), Rational(1)}, HeckeElement::unit(n)));
  CHECK(sq == expect);
  // g1 g3 = g3 g1 in H_4
  HeckeElement t3 = HeckeElement::generator(n, 3);
  CHECK(hecke_product(t1, t3, n) == hecke_product(t3, t1, n));
  // g1 g2 g1 = g2 g1 g2 in H_3
  HeckeElement a = HeckeElement::generator(3, 1), b = HeckeElement::generator(3, 2);
  CHECK(hecke_product(hecke_product(a, b, 3), a, 3) ==
        hecke_product(hecke_product(b, a, 3), b, 3));
  // length-additive products reconstruct basis elements
  HeckeElement::Perm w{1, 2, 0};  // = s1 of s2, s2 applied first
  HeckeElement prod = hecke_product(HeckeElement::generator(3, 1),
                                    HeckeElement::generator(3, 2), 3);
  bool found = false;
  for (const auto& [x, c] : prod.terms())
    if (x == w && c == QPolynomial{Rational(1)}) found = true;
  CHECK(found);
  CHECK(prod.terms().size() == 1);
  CHECK_THROWS_AS(hecke_product(HeckeElement::unit(8), HeckeElement::unit(8), 8),
                  std::invalid_argument);
}

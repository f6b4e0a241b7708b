#include <stdexcept>

#include "braidprob/matrix_rep.hpp"
#include "braidprob/ncprob.hpp"
#include "doctest.h"

using namespace braidprob;
using cdouble = std::complex<double>;

namespace {

DenseMatrix pauli_x() {
  DenseMatrix x(2);
  x.at(0, 1) = {1.0, 0.0};
  x.at(1, 0) = {1.0, 0.0};
  return x;
}

std::vector<DenseMatrix> matrix_units(size_t d) {
  std::vector<DenseMatrix> out;
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c) {
      DenseMatrix m(d);
      m.at(r, c) = {1.0, 0.0};
      out.push_back(std::move(m));
    }
  return out;
}

}  // namespace

TEST_CASE("conditional expectation basics") {
  FiniteProbSpace m2(2, matrix_units(2));
  // onto scalars: E(x) = state(x) 1
  CondExpectation onto_scalars = conditional_expectation(m2, Subalgebra::scalars(2));
  DenseMatrix x = pauli_x();
  DenseMatrix ex = onto_scalars.apply(x);
  CHECK(DenseMatrix::normalized_distance(ex, DenseMatrix::zero(2)) < 1e-12);
  DenseMatrix d(2);
  d.at(0, 0) = {3.0, 0.0};
  d.at(1, 1) = {1.0, 0.0};
  CHECK(DenseMatrix::normalized_distance(onto_scalars.apply(d),
                                         cdouble{2.0, 0.0} * DenseMatrix::identity(2)) < 1e-12);
  // onto the diagonal: kills the flip
  DenseMatrix e00(2), e11(2);
  e00.at(0, 0) = {1.0, 0.0};
  e11.at(1, 1) = {1.0, 0.0};
  CondExpectation onto_diag =
      conditional_expectation(m2, Subalgebra::generated(2, {e00, e11}));
  CHECK(DenseMatrix::normalized_distance(onto_diag.apply(x), DenseMatrix::zero(2)) < 1e-12);
  CHECK(onto_diag.self_check(m2) < 1e-8);
  CHECK(onto_scalars.self_check(m2) < 1e-8);
}

TEST_CASE("supplied density states are validated") {
  DenseMatrix rho(2);
  rho.at(0, 0) = {0.75, 0.0};
  rho.at(1, 1) = {0.25, 0.0};
  FiniteProbSpace biased(2, matrix_units(2), rho);
  DenseMatrix e00(2);
  e00.at(0, 0) = {1.0, 0.0};
  CHECK(std::abs(biased.state(e00) - cdouble{0.75, 0.0}) < 1e-12);
  DenseMatrix singular(2);
  singular.at(0, 0) = {1.0, 0.0};  // trace 1 but not faithful
  CHECK_THROWS_AS(FiniteProbSpace(2, matrix_units(2), singular), std::invalid_argument);
  DenseMatrix untraced = DenseMatrix::identity(2);
  CHECK_THROWS_AS(FiniteProbSpace(2, matrix_units(2), untraced), std::invalid_argument);
}

TEST_CASE("conditional expectation rejects bad targets") {
  FiniteProbSpace m2(2, matrix_units(2));
  // span without the unit
  Subalgebra no_unit;
  DenseMatrix e00(2);
  e00.at(0, 0) = {1.0, 0.0};
  no_unit.basis.push_back(e00);
  CHECK_THROWS_AS(conditional_expectation(m2, no_unit), std::invalid_argument);
  // not star closed
  Subalgebra not_star;
  DenseMatrix e01(2);
  e01.at(0, 1) = {1.0, 0.0};
  not_star.basis = orthonormalize({DenseMatrix::identity(2), e01});
  CHECK_THROWS_AS(conditional_expectation(m2, not_star), std::invalid_argument);
  // not inside a smaller space
  FiniteProbSpace diag_space(2, {Subalgebra::generated(2, {pauli_x()}).basis});
  (void)diag_space;
}

TEST_CASE("expectation module property and positivity on the gaussian tower") {
  GaussianRep rep = build_gaussian(2, 4);
  FiniteProbSpace space(rep.e[0].dim(), rep.e);
  Subalgebra m1 = Subalgebra::generated(rep.e[0].dim(), {rep.e[0], rep.e[1]});
  CondExpectation e = conditional_expectation(space, m1);
  CHECK(e.self_check(space) < 1e-8);
  // complete positivity spot check: E(x*x) has nonnegative spectrum
  for (size_t k = 0; k < 6; ++k) {
    const DenseMatrix& x = space.basis()[k * 3 % space.basis().size()];
    DenseMatrix exx = e.apply(x.adjoint() * x);
    auto ev = hermitian_eigenvalues(exx);
    CHECK(ev.front() > -1e-8);
  }
}

TEST_CASE("commuting squares in the gaussian tower") {
  GaussianRep rep = build_gaussian(2, 4);
  size_t d = rep.e[0].dim();
  FiniteProbSpace space(d, rep.e);
  Subalgebra scal = Subalgebra::scalars(d);
  Subalgebra m0 = Subalgebra::generated(d, {rep.e[0]});
  Subalgebra m1 = Subalgebra::generated(d, {rep.e[0], rep.e[1]});
  Subalgebra ad_m0 =
      Subalgebra::generated(d, {rep.u[0] * rep.e[0] * rep.u[0].adjoint()});
  // [M0 subset M1; C subset Ad(u1)(M0)] is a commuting square
  CommutingSquareReport sq = is_commuting_square(space, scal, m0, ad_m0);
  CHECK(sq.pass());
  CHECK(sq.consistent());
  // trivial square: everything equal
  CommutingSquareReport triv = is_commuting_square(space, m1, m1, m1);
  CHECK(triv.pass());
  // a non-square: N1 = N2 = M0 over scalars fails (iv) and (v) agree on it
  CommutingSquareReport bad = is_commuting_square(space, scal, m0, m0);
  CHECK_FALSE(bad.pass());
  CHECK(bad.consistent());
}

TEST_CASE("criteria (iv) and (v) agree on assorted triples in M_2") {
  FiniteProbSpace m2(2, matrix_units(2));
  DenseMatrix e00(2), e11(2);
  e00.at(0, 0) = {1.0, 0.0};
  e11.at(1, 1) = {1.0, 0.0};
  Subalgebra diag = Subalgebra::generated(2, {e00, e11});
  Subalgebra flip = Subalgebra::generated(2, {pauli_x()});
  Subalgebra scal = Subalgebra::scalars(2);
  CommutingSquareReport r = is_commuting_square(m2, scal, diag, flip);
  CHECK(r.consistent());
  CommutingSquareReport r2 = is_commuting_square(m2, scal, diag, diag);
  CHECK(r2.consistent());
}

TEST_CASE("independence of tensor legs and gaussian blocks") {
  // tensor independence: leg 0 and leg 1 of M_2 ox M_2 over scalars
  DenseMatrix x0 = DenseMatrix::kron(pauli_x(), DenseMatrix::identity(2));
  DenseMatrix x1 = DenseMatrix::kron(DenseMatrix::identity(2), pauli_x());
  FiniteProbSpace m4(4, matrix_units(4));
  Subalgebra leg0 = Subalgebra::generated(4, {x0});
  Subalgebra leg1 = Subalgebra::generated(4, {x1});
  IndependenceReport rep =
      check_independence(m4, Subalgebra::scalars(4), leg0, leg1);
  CHECK(rep.verdict.pass);

  // gaussian: alg(e0) and Ad(u1)(alg(e0)) are C-independent
  GaussianRep g = build_gaussian(2, 4);
  size_t d = g.e[0].dim();
  FiniteProbSpace space(d, g.e);
  Subalgebra a0 = Subalgebra::generated(d, {g.e[0]});
  Subalgebra a1 = Subalgebra::generated(d, {g.u[0] * g.e[0] * g.u[0].adjoint()});
  CHECK(check_independence(space, Subalgebra::scalars(d), a0, a1).verdict.pass);

  // deliberately entangled pair fails
  IndependenceReport bad = check_independence(space, Subalgebra::scalars(d), a0, a0);
  CHECK_FALSE(bad.verdict.pass);
}

TEST_CASE("relative commutants") {
  FiniteProbSpace m4(4, matrix_units(4));
  // empty set: the whole algebra
  Subalgebra whole = relative_commutant(m4, {});
  CHECK(whole.span_dim() == 16);
  // full matrix algebra: scalars only
  Subalgebra center = relative_commutant(m4, matrix_units(4));
  CHECK(center.span_dim() == 1);
  CHECK(same_span(center, Subalgebra::scalars(4)));
}

TEST_CASE("gaussian tower reconstruction: commutant margins") {
  GaussianRep rep = build_gaussian(2, 6);
  size_t d = rep.e[0].dim();
  // module-example margin: ambient alg(e0..e4), u-set {u_3, u_4, u_5}
  FiniteProbSpace ambient(d, {rep.e[0], rep.e[1], rep.e[2], rep.e[3], rep.e[4]});
  Subalgebra commutant =
      relative_commutant(ambient, {rep.u[2], rep.u[3], rep.u[4]});
  Subalgebra m1 = Subalgebra::generated(d, {rep.e[0], rep.e[1]});
  CHECK(same_span(commutant, m1));
}

TEST_CASE("bernoulli factorization for the gaussian shift") {
  GaussianRep rep = build_gaussian(2, 6);
  size_t d = rep.e[0].dim();
  FiniteProbSpace space(d, rep.e);
  Subalgebra gen = Subalgebra::generated(d, {rep.e[0]});
  BernoulliReport full = bernoulli_factorization_check(space, rep.u, {}, gen, 3, true);
  CHECK(full.verdict.pass);
  CHECK(full.pairs_checked > 20);
  // vacuous generator passes
  BernoulliReport vac =
      bernoulli_factorization_check(space, rep.u, {}, Subalgebra::scalars(d), 2, true);
  CHECK(vac.verdict.pass);
}

TEST_CASE("mixed omega shift is an ordered bernoulli shift over scalars") {
  auto us = r_matrix_braid_unitaries_mixed(
      {cdouble{1, 0}, cdouble{-1, 0}, cdouble{1, 0}}, 4);
  size_t d = 16;
  FiniteProbSpace space(d, matrix_units(d));
  DenseMatrix x0 = DenseMatrix::kron(
      pauli_x(), DenseMatrix::identity(8));
  Subalgebra gen = Subalgebra::generated(d, {x0});
  BernoulliReport order = bernoulli_factorization_check(space, us, {}, gen, 2, false);
  CHECK(order.verdict.pass);
  CHECK(order.order_only);
}

#include "braidprob/ncprob.hpp"

#include <cmath>
#include <stdexcept>

#include "braidprob/kernels.hpp"
#include "braidprob/matrix_rep.hpp"

namespace braidprob {

namespace {

// complete a spanning set under star and multiplication, orthonormalized
std::vector<DenseMatrix> complete_span(size_t dim, std::vector<DenseMatrix> gens, double tol) {
  gens.push_back(DenseMatrix::identity(dim));
  size_t start = gens.size();
  for (size_t i = 0; i < start; ++i) gens.push_back(gens[i].adjoint());
  std::vector<DenseMatrix> basis = orthonormalize(gens, tol);
  for (;;) {
    size_t before = basis.size();
    std::vector<DenseMatrix> extended = basis;
    for (size_t i = 0; i < before && extended.size() < dim * dim; ++i)
      for (size_t j = 0; j < before && extended.size() < dim * dim; ++j)
        extended.push_back(basis[i] * basis[j]);
    basis = orthonormalize(extended, tol);
    if (basis.size() == before || basis.size() >= dim * dim) return basis;
  }
}

DenseMatrix project(const std::vector<DenseMatrix>& basis, const DenseMatrix& x) {
  DenseMatrix out = DenseMatrix::zero(x.dim());
  for (const DenseMatrix& b : basis) {
    std::complex<double> c = hs_inner(b, x);
    kernels::active().axpy(out.data(), c, b.data(), x.dim() * x.dim());
  }
  return out;
}

double residual_off_span(const std::vector<DenseMatrix>& basis, const DenseMatrix& x) {
  return DenseMatrix::normalized_distance(project(basis, x), x);
}

}  // namespace

FiniteProbSpace::FiniteProbSpace(size_t dim, const std::vector<DenseMatrix>& generators,
                                 std::optional<DenseMatrix> density, double tol)
    : dim_(dim), density_(std::move(density)) {
  for (const DenseMatrix& g : generators)
    if (g.dim() != dim) throw std::invalid_argument("FiniteProbSpace: dimension mismatch");
  if (density_) {
    if (density_->dim() != dim)
      throw std::invalid_argument("FiniteProbSpace: density dimension mismatch");
    if (DenseMatrix::normalized_distance(*density_, density_->adjoint()) > tol ||
        std::abs(density_->trace() - std::complex<double>{1.0, 0.0}) > tol)
      throw std::invalid_argument("FiniteProbSpace: density must be Hermitian with trace 1");
    auto ev = hermitian_eigenvalues(*density_);
    if (ev.front() < tol)
      throw std::invalid_argument("FiniteProbSpace: density state is not faithful");
  }
  basis_ = complete_span(dim, generators, tol);
}

std::complex<double> FiniteProbSpace::state(const DenseMatrix& x) const {
  if (!density_) return x.normalized_trace();
  return ((*density_) * x).trace();
}

Subalgebra Subalgebra::generated(size_t dim, const std::vector<DenseMatrix>& generators,
                                 double tol) {
  Subalgebra s;
  s.basis = complete_span(dim, generators, tol);
  return s;
}

Subalgebra Subalgebra::scalars(size_t dim) {
  Subalgebra s;
  s.basis.push_back(DenseMatrix::identity(dim));
  return s;
}

CondExpectation::CondExpectation(const FiniteProbSpace& space, Subalgebra target)
    : target_(std::move(target)) {
  (void)space;
}

DenseMatrix CondExpectation::apply(const DenseMatrix& x) const {
  return project(target_.basis, x);
}

double CondExpectation::self_check(const FiniteProbSpace& space) const {
  double worst = 0.0;
  DenseMatrix one = DenseMatrix::identity(space.dim());
  worst = std::max(worst, DenseMatrix::normalized_distance(apply(one), one));
  for (const DenseMatrix& x : space.basis()) {
    DenseMatrix ex = apply(x);
    worst = std::max(worst, DenseMatrix::normalized_distance(apply(ex), ex));
    worst = std::max(worst, std::abs(space.state(ex) - space.state(x)));
  }
  // module property over the target's basis on a few space elements
  size_t count = 0;
  for (const DenseMatrix& x : space.basis()) {
    if (++count > 8) break;
    DenseMatrix ex = apply(x);
    for (const DenseMatrix& a : target_.basis)
      for (const DenseMatrix& b : target_.basis) {
        DenseMatrix lhs = apply(a * x * b);
        DenseMatrix rhs = a * ex * b;
        worst = std::max(worst, DenseMatrix::normalized_distance(lhs, rhs));
      }
  }
  return worst;
}

CondExpectation conditional_expectation(const FiniteProbSpace& space, const Subalgebra& sub) {
  if (sub.basis.empty()) throw std::invalid_argument("conditional_expectation: empty span");
  DenseMatrix one = DenseMatrix::identity(space.dim());
  if (residual_off_span(sub.basis, one) > 1e-7)
    throw std::invalid_argument("conditional_expectation: unit missing from the span");
  for (const DenseMatrix& b : sub.basis) {
    if (residual_off_span(sub.basis, b.adjoint()) > 1e-7)
      throw std::invalid_argument("conditional_expectation: span is not star-closed");
    if (residual_off_span(space.basis(), b) > 1e-7)
      throw std::invalid_argument("conditional_expectation: span not inside the space");
  }
  return CondExpectation(space, sub);
}

CommutingSquareReport is_commuting_square(const FiniteProbSpace& space, const Subalgebra& n,
                                          const Subalgebra& n1, const Subalgebra& n2) {
  for (const DenseMatrix& b : n.basis) {
    if (residual_off_span(n1.basis, b) > 1e-7 || residual_off_span(n2.basis, b) > 1e-7)
      throw std::invalid_argument("is_commuting_square: N not inside N1 and N2");
  }
  CondExpectation en = conditional_expectation(space, n);
  CondExpectation e1 = conditional_expectation(space, n1);
  CondExpectation e2 = conditional_expectation(space, n2);
  double r_iv = 0.0, r_v = 0.0;
  for (const DenseMatrix& x : space.basis()) {
    DenseMatrix e12 = e1.apply(e2.apply(x));
    r_iv = std::max(r_iv, DenseMatrix::normalized_distance(e12, en.apply(x)));
    r_v = std::max(r_v, DenseMatrix::normalized_distance(e12, e2.apply(e1.apply(x))));
  }
  // criterion (v) includes N = N1 cap N2; with N inside both it reduces to
  // the rank identity dim N = dim N1 + dim N2 - dim(N1 v N2 as spans)
  std::vector<DenseMatrix> joint = n1.basis;
  joint.insert(joint.end(), n2.basis.begin(), n2.basis.end());
  size_t sum_dim = orthonormalize(joint).size();
  size_t inter_dim = n1.basis.size() + n2.basis.size() - sum_dim;
  if (inter_dim != n.basis.size()) r_v = std::max(r_v, 1.0);
  CommutingSquareReport rep;
  rep.criterion_iv = Verdict::from_residual(r_iv);
  rep.criterion_v = Verdict::from_residual(r_v);
  return rep;
}

IndependenceReport check_independence(const FiniteProbSpace& space, const Subalgebra& n,
                                      const Subalgebra& n1, const Subalgebra& n2,
                                      const std::vector<DenseMatrix>& battery_left,
                                      const std::vector<DenseMatrix>& battery_right) {
  // join N_i v N
  std::vector<DenseMatrix> gens1 = n1.basis, gens2 = n2.basis;
  gens1.insert(gens1.end(), n.basis.begin(), n.basis.end());
  gens2.insert(gens2.end(), n.basis.begin(), n.basis.end());
  Subalgebra join1 = Subalgebra::generated(space.dim(), gens1);
  Subalgebra join2 = Subalgebra::generated(space.dim(), gens2);
  CondExpectation en = conditional_expectation(space, n);
  const std::vector<DenseMatrix>& lefts = battery_left.empty() ? join1.basis : battery_left;
  const std::vector<DenseMatrix>& rights = battery_right.empty() ? join2.basis : battery_right;
  IndependenceReport rep;
  double worst = 0.0;
  for (const DenseMatrix& x : lefts)
    for (const DenseMatrix& y : rights) {
      ++rep.pairs_checked;
      DenseMatrix lhs = en.apply(x * y);
      DenseMatrix rhs = en.apply(x) * en.apply(y);
      double r = DenseMatrix::normalized_distance(lhs, rhs);
      if (r > worst) {
        worst = r;
        if (r > 1e-8) rep.note = "factorization fails on a battery pair";
      }
    }
  rep.verdict = Verdict::from_residual(worst);
  return rep;
}

Subalgebra relative_commutant(const FiniteProbSpace& space,
                              const std::vector<DenseMatrix>& set, double tol) {
  const std::vector<DenseMatrix>& basis = space.basis();
  size_t J = basis.size();
  if (set.empty()) {
    Subalgebra out;
    out.basis = basis;
    return out;
  }
  // Gram matrix of the stacked commutator map: G_{jk} = sum_s <[b_j,s],[b_k,s]>
  DenseMatrix gram(J);
  std::vector<std::vector<DenseMatrix>> comms(J);
  for (size_t j = 0; j < J; ++j)
    for (const DenseMatrix& s : set) comms[j].push_back(basis[j] * s - s * basis[j]);
  for (size_t j = 0; j < J; ++j)
    for (size_t k = 0; k < J; ++k) {
      std::complex<double> acc = 0.0;
      for (size_t si = 0; si < set.size(); ++si) acc += hs_inner(comms[j][si], comms[k][si]);
      gram.at(j, k) = acc;
    }
  // nullspace via Jacobi eigen-decomposition of the Hermitian Gram matrix:
  // accumulate the rotations to recover eigenvectors
  DenseMatrix a = gram;
  DenseMatrix vecs = DenseMatrix::identity(J);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t p = 0; p < J; ++p)
      for (size_t q = p + 1; q < J; ++q) off += std::norm(a.at(p, q));
    if (off < 1e-26) break;
    for (size_t p = 0; p < J; ++p)
      for (size_t q = p + 1; q < J; ++q) {
        std::complex<double> apq = a.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double app = a.at(p, p).real(), aqq = a.at(q, q).real();
        double absapq = std::abs(apq);
        std::complex<double> phase = apq / absapq;
        double theta = 0.5 * std::atan2(2.0 * absapq, app - aqq);
        double c = std::cos(theta), s = std::sin(theta);
        for (size_t k = 0; k < J; ++k) {
          std::complex<double> akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
          std::complex<double> vkp = vecs.at(k, p), vkq = vecs.at(k, q);
          vecs.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
          vecs.at(k, q) = -s * phase * vkp + c * vkq;
        }
        for (size_t k = 0; k < J; ++k) {
          std::complex<double> apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
      }
  }
  // candidate null vectors by a loose relative cut, then confirmed against
  // the actual commutator residual (the Gram's zero modes only compute to
  // machine-epsilon times its largest eigenvalue)
  double lambda_max = 0.0;
  for (size_t col = 0; col < J; ++col) lambda_max = std::max(lambda_max, a.at(col, col).real());
  double cut = 1e-10 * std::max(1.0, lambda_max);
  std::vector<DenseMatrix> null_vectors;
  for (size_t col = 0; col < J; ++col) {
    if (a.at(col, col).real() > cut) continue;
    DenseMatrix v = DenseMatrix::zero(space.dim());
    for (size_t j = 0; j < J; ++j)
      kernels::active().axpy(v.data(), vecs.at(j, col), basis[j].data(),
                             v.dim() * v.dim());
    double worst = 0.0;
    for (const DenseMatrix& s : set)
      worst = std::max(worst, DenseMatrix::normalized_distance(v * s, s * v));
    if (worst < tol) null_vectors.push_back(std::move(v));
  }
  Subalgebra out;
  out.basis = orthonormalize(null_vectors);
  return out;
}

bool same_span(const Subalgebra& a, const Subalgebra& b, double tol) {
  if (a.basis.size() != b.basis.size()) return false;
  for (const DenseMatrix& x : a.basis)
    if (residual_off_span(b.basis, x) > tol) return false;
  for (const DenseMatrix& x : b.basis)
    if (residual_off_span(a.basis, x) > tol) return false;
  return true;
}

BernoulliReport bernoulli_factorization_check(const FiniteProbSpace& space,
                                              const std::vector<DenseMatrix>& us,
                                              const std::vector<int>& signs,
                                              const Subalgebra& generator, int max_shift,
                                              bool full, double tol) {
  if (max_shift < 1) throw std::invalid_argument("bernoulli_factorization_check: max_shift");
  if (static_cast<size_t>(max_shift + 1) > us.size())
    throw std::invalid_argument("bernoulli_factorization_check: not enough u factors");
  // the conditioning algebra: the fixed-point candidate inside the
  // generator (N subset B_0 pointwise fixed, as the Bernoulli definition
  // requires). Computing it in the full ambient would pick up spurious
  // boundary commutants of the truncation.
  FiniteProbSpace gen_space(space.dim(), generator.basis);
  Subalgebra n = relative_commutant(gen_space, us);
  // blocks alpha^k(generator)
  std::vector<std::vector<DenseMatrix>> blocks;
  for (int k = 0; k <= max_shift; ++k) {
    std::vector<DenseMatrix> block;
    for (const DenseMatrix& g : generator.basis) {
      if (k == 0)
        block.push_back(g);
      else
        block.push_back(product_endomorphism_iterated(us, signs, g, k));
    }
    blocks.push_back(std::move(block));
  }
  BernoulliReport rep;
  rep.order_only = !full;
  double worst = 0.0;
  auto gather = [&](uint32_t mask) {
    std::vector<DenseMatrix> gens;
    for (int k = 0; k <= max_shift; ++k)
      if (mask & (1u << k))
        gens.insert(gens.end(), blocks[k].begin(), blocks[k].end());
    return Subalgebra::generated(space.dim(), gens);
  };
  uint32_t all = (1u << (max_shift + 1)) - 1;
  for (uint32_t mi = 1; mi <= all; ++mi) {
    for (uint32_t mj = 1; mj <= all; ++mj) {
      if (mi & mj) continue;
      if (!full) {
        // interval pairs I < J only
        auto is_interval = [](uint32_t m) {
          while (m && !(m & 1)) m >>= 1;
          return (m & (m + 1)) == 0;
        };
        if (!is_interval(mi) || !is_interval(mj)) continue;
        int max_i = 31 - __builtin_clz(mi), min_j = __builtin_ctz(mj);
        if (max_i >= min_j) continue;
      }
      Subalgebra a1 = gather(mi);
      Subalgebra a2 = gather(mj);
      IndependenceReport ir = check_independence(space, n, a1, a2);
      worst = std::max(worst, ir.verdict.residual);
      ++rep.pairs_checked;
      if (worst > tol && !full) break;
    }
  }
  rep.verdict = Verdict::from_residual(worst);
  return rep;
}

}  // namespace braidprob

#include <random>

#include "braidprob/kernels.hpp"
#include "braidprob/matrix.hpp"
#include "doctest.h"

using namespace braidprob;
using kernels::cdouble;

namespace {

std::vector<cdouble> random_buffer(std::mt19937_64& rng, size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cdouble> v(n);
  for (auto& x : v) x = {d(rng), d(rng)};
  return v;
}

}  // namespace

TEST_CASE("simd variants agree with the scalar reference") {
  std::vector<const kernels::Ops*> variants{&kernels::scalar_ops()};
  if (kernels::avx2_ops()) variants.push_back(kernels::avx2_ops());
  if (kernels::neon_ops()) variants.push_back(kernels::neon_ops());
  std::mt19937_64 rng(909090);
  for (size_t n : {1, 2, 3, 5, 8, 17, 33, 64}) {
    auto a = random_buffer(rng, n * n);
    auto b = random_buffer(rng, n * n);
    std::vector<cdouble> c_ref(n * n);
    kernels::scalar_ops().matmul(c_ref.data(), a.data(), b.data(), n);
    cdouble dot_ref = kernels::scalar_ops().dot(a.data(), b.data(), n * n);
    double frob_ref = kernels::scalar_ops().frob_diff_sq(a.data(), b.data(), n * n);
    std::vector<cdouble> y_ref = a;
    kernels::scalar_ops().axpy(y_ref.data(), {0.7, -0.3}, b.data(), n * n);
    for (const kernels::Ops* ops : variants) {
      CAPTURE(ops->name);
      std::vector<cdouble> c(n * n);
      ops->matmul(c.data(), a.data(), b.data(), n);
      double err = 0;
      for (size_t i = 0; i < n * n; ++i) err = std::max(err, std::abs(c[i] - c_ref[i]));
      CHECK(err < 1e-12);
      CHECK(std::abs(ops->dot(a.data(), b.data(), n * n) - dot_ref) < 1e-12);
      CHECK(std::abs(ops->frob_diff_sq(a.data(), b.data(), n * n) - frob_ref) < 1e-12 * (1.0 + frob_ref));
      std::vector<cdouble> y = a;
      ops->axpy(y.data(), {0.7, -0.3}, b.data(), n * n);
      for (size_t i = 0; i < n * n; ++i) CHECK(std::abs(y[i] - y_ref[i]) < 1e-12);
    }
  }
}

TEST_CASE("kernel selection override") {
  std::string before = kernels::active().name;
  kernels::select("scalar");
  CHECK(std::string(kernels::active().name) == "scalar");
  CHECK_THROWS(kernels::select("nope"));
  kernels::select(before);
}

TEST_CASE("dense matrix algebra") {
  DenseMatrix a(2), b(2);
  a.at(0, 1) = {1.0, 0.0};
  a.at(1, 0) = {1.0, 0.0};  // flip
  b.at(0, 0) = {1.0, 0.0};
  b.at(1, 1) = {0.0, 1.0};  // diag(1, i)
  DenseMatrix ab = a * b;
  CHECK(ab.at(0, 1) == cdouble{0.0, 1.0});
  CHECK(ab.at(1, 0) == cdouble{1.0, 0.0});
  CHECK(a.is_unitary());
  CHECK(b.is_unitary());
  CHECK(std::abs((a * a).normalized_trace() - cdouble{1.0, 0.0}) < 1e-14);
  DenseMatrix k = DenseMatrix::kron(a, b);
  CHECK(k.dim() == 4);
  CHECK(k.at(0, 2) == cdouble{1.0, 0.0});
  CHECK(k.at(1, 3) == cdouble{0.0, 1.0});
}

TEST_CASE("hermitian eigenvalues via jacobi") {
  // pauli-x eigenvalues +-1
  DenseMatrix x(2);
  x.at(0, 1) = {1.0, 0.0};
  x.at(1, 0) = {1.0, 0.0};
  auto ev = hermitian_eigenvalues(x);
  CHECK(std::abs(ev[0] + 1.0) < 1e-10);
  CHECK(std::abs(ev[1] - 1.0) < 1e-10);
  // a random Hermitian matrix: eigenvalue sum equals the trace, sum of
  // squares equals the Frobenius norm squared
  std::mt19937_64 rng(4141);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int it = 0; it < 20; ++it) {
    size_t n = 6;
    DenseMatrix h(n);
    for (size_t r = 0; r < n; ++r) {
      h.at(r, r) = {d(rng), 0.0};
      for (size_t c = r + 1; c < n; ++c) {
        h.at(r, c) = {d(rng), d(rng)};
        h.at(c, r) = std::conj(h.at(r, c));
      }
    }
    auto evs = hermitian_eigenvalues(h);
    double sum = 0, sq = 0;
    for (double e : evs) {
      sum += e;
      sq += e * e;
    }
    CHECK(std::abs(sum - h.trace().real()) < 1e-9);
    CHECK(std::abs(sq - h.frobenius_norm() * h.frobenius_norm()) < 1e-9);
  }
}

TEST_CASE("orthonormalize returns an HS-orthonormal basis of the span") {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<DenseMatrix> mats;
  for (int k = 0; k < 5; ++k) {
    DenseMatrix m(3);
    for (size_t i = 0; i < 9; ++i) m.data()[i] = {d(rng), d(rng)};
    mats.push_back(m);
  }
  mats.push_back(mats[0] + mats[1]);  // dependent
  auto basis = orthonormalize(mats);
  CHECK(basis.size() == 5);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      cdouble ip = hs_inner(basis[i], basis[j]);
      CHECK(std::abs(ip - (i == j ? cdouble{1, 0} : cdouble{0, 0})) < 1e-9);
    }
}

#include "braidprob/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "braidprob/kernels.hpp"

namespace braidprob {

DenseMatrix DenseMatrix::identity(size_t dim) {
  DenseMatrix m(dim);
  for (size_t i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  DenseMatrix c(a.dim_);
  kernels::active().matmul(c.data(), a.data(), b.data(), a.dim_);
  return c;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  DenseMatrix c = a;
  kernels::active().axpy(c.data(), {1.0, 0.0}, b.data(), b.dim_ * b.dim_);
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  DenseMatrix c = a;
  kernels::active().axpy(c.data(), {-1.0, 0.0}, b.data(), b.dim_ * b.dim_);
  return c;
}

DenseMatrix operator*(std::complex<double> s, const DenseMatrix& a) {
  DenseMatrix c(a.dim_);
  kernels::active().axpy(c.data(), s, a.data(), a.dim_ * a.dim_);
  return c;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix c(dim_);
  for (size_t r = 0; r < dim_; ++r)
    for (size_t col = 0; col < dim_; ++col) c.at(col, r) = std::conj(at(r, col));
  return c;
}

std::complex<double> DenseMatrix::trace() const {
  cdouble t = 0.0;
  for (size_t i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

std::complex<double> DenseMatrix::normalized_trace() const {
  return trace() / static_cast<double>(dim_);
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cdouble& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double DenseMatrix::normalized_distance(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  double s = kernels::active().frob_diff_sq(a.data(), b.data(), a.dim_ * a.dim_);
  return std::sqrt(s / static_cast<double>(a.dim_));
}

bool DenseMatrix::is_unitary(double tol) const {
  DenseMatrix p = *this * adjoint();
  return normalized_distance(p, identity(dim_)) < tol;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.dim_ * b.dim_);
  for (size_t ar = 0; ar < a.dim_; ++ar)
    for (size_t ac = 0; ac < a.dim_; ++ac) {
      cdouble v = a.at(ar, ac);
      if (v == cdouble(0.0, 0.0)) continue;
      for (size_t br = 0; br < b.dim_; ++br)
        for (size_t bc = 0; bc < b.dim_; ++bc)
          c.at(ar * b.dim_ + br, ac * b.dim_ + bc) = v * b.at(br, bc);
    }
  return c;
}

std::complex<double> hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hs_inner: dimension mismatch");
  std::complex<double> d = kernels::active().dot(a.data(), b.data(), a.dim() * a.dim());
  return d / static_cast<double>(a.dim());
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& h, double tol) {
  size_t n = h.dim();
  DenseMatrix a = h;
  // cyclic Jacobi on the Hermitian matrix; adequate at these dimensions
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off += std::norm(a.at(p, q));
    if (off < tol * tol) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        std::complex<double> apq = a.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double app = a.at(p, p).real();
        double aqq = a.at(q, q).real();
        // zero the (p,q) entry with R = [[c, -s e^{i t}],[s e^{-i t}, c]],
        // e^{i t} the phase of a_pq, tan(2 theta) = 2|a_pq| / (a_pp - a_qq)
        double absapq = std::abs(apq);
        std::complex<double> phase = apq / absapq;
        double theta = 0.5 * std::atan2(2.0 * absapq, app - aqq);
        double c = std::cos(theta), s = std::sin(theta);
        for (size_t k = 0; k < n; ++k) {  // A <- A R
          std::complex<double> akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {  // A <- R* A
          std::complex<double> apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (size_t i = 0; i < n; ++i) ev[i] = a.at(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<DenseMatrix> orthonormalize(const std::vector<DenseMatrix>& mats, double tol) {
  std::vector<DenseMatrix> basis;
  for (const DenseMatrix& m : mats) {
    DenseMatrix v = m;
    // two rounds of projection for numerical stability
    for (int round = 0; round < 2; ++round)
      for (const DenseMatrix& b : basis) {
        std::complex<double> c = hs_inner(b, v);
        kernels::active().axpy(v.data(), -c, b.data(), v.dim() * v.dim());
      }
    double norm = std::sqrt(std::abs(hs_inner(v, v).real()));
    if (norm < tol) continue;
    v = std::complex<double>(1.0 / norm, 0.0) * v;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace braidprob

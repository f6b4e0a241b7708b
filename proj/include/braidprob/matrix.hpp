#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace braidprob {

// Row-major square complex matrix over the runtime-dispatched kernels.
class DenseMatrix {
 public:
  using cdouble = std::complex<double>;

  DenseMatrix() = default;
  explicit DenseMatrix(size_t dim) : dim_(dim), data_(dim * dim) {}

  static DenseMatrix identity(size_t dim);
  static DenseMatrix zero(size_t dim) { return DenseMatrix(dim); }

  size_t dim() const { return dim_; }
  cdouble& at(size_t r, size_t c) { return data_[r * dim_ + c]; }
  const cdouble& at(size_t r, size_t c) const { return data_[r * dim_ + c]; }
  cdouble* data() { return data_.data(); }
  const cdouble* data() const { return data_.data(); }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(cdouble s, const DenseMatrix& a);

  DenseMatrix adjoint() const;
  DenseMatrix inverse_unitary() const { return adjoint(); }  // for unitaries

  // normalized trace tr(.)/dim, the canonical state on matrix algebras
  cdouble normalized_trace() const;
  cdouble trace() const;

  double frobenius_norm() const;
  // ||a - b||_F / sqrt(dim): the residual scale used by all verdicts
  static double normalized_distance(const DenseMatrix& a, const DenseMatrix& b);
  bool is_unitary(double tol = 1e-9) const;

  // Kronecker product (a acts on the left tensor leg)
  static DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  size_t dim_ = 0;
  std::vector<cdouble> data_;
};

// HS inner product <a, b> = normalized_trace(a* b)
std::complex<double> hs_inner(const DenseMatrix& a, const DenseMatrix& b);

// Eigenvalues of a Hermitian matrix via cyclic Jacobi, ascending.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& h, double tol = 1e-12);

// Gram-Schmidt over the HS inner product; near-dependent vectors (residual
// below tol) are dropped. Returns an orthonormal basis of the span.
std::vector<DenseMatrix> orthonormalize(const std::vector<DenseMatrix>& mats,
                                        double tol = 1e-9);

}  // namespace braidprob

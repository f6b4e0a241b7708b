#include "braidprob/kernels.hpp"

namespace braidprob::kernels {

namespace {

// Reference kernels. ikj order keeps B accesses streaming; these definitions
// are the semantics the SIMD variants are tested against.
void matmul_scalar(cdouble* c, const cdouble* a, const cdouble* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    cdouble* crow = c + i * n;
    for (size_t j = 0; j < n; ++j) crow[j] = cdouble(0.0, 0.0);
    for (size_t k = 0; k < n; ++k) {
      cdouble aik = a[i * n + k];
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      const cdouble* brow = b + k * n;
      for (size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

void axpy_scalar(cdouble* y, cdouble alpha, const cdouble* x, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cdouble dot_scalar(const cdouble* x, const cdouble* y, size_t n) {
  cdouble acc(0.0, 0.0);
  for (size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double frob_diff_sq_scalar(const cdouble* x, const cdouble* y, size_t n) {
  double acc = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double re = x[i].real() - y[i].real();
    double im = x[i].imag() - y[i].imag();
    acc += re * re + im * im;
  }
  return acc;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{matmul_scalar, axpy_scalar, dot_scalar, frob_diff_sq_scalar, "scalar"};
  return ops;
}

}  // namespace braidprob::kernels

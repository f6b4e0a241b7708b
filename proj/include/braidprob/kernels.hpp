#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace braidprob::kernels {

using cdouble = std::complex<double>;

// Dense complex kernels backing the matrix layer. Scalar reference
// implementations always exist; AVX2 (x86) and NEON (aarch64) variants are
// selected once at startup from CPU capabilities. BRAIDPROB_KERNEL=scalar
// (or avx2/neon) overrides the choice; equivalence tests compare variants.

struct Ops {
  // c = a * b, row-major n x n
  void (*matmul)(cdouble* c, const cdouble* a, const cdouble* b, size_t n);
  // y += alpha * x
  void (*axpy)(cdouble* y, cdouble alpha, const cdouble* x, size_t n);
  // sum conj(x[i]) * y[i]
  cdouble (*dot)(const cdouble* x, const cdouble* y, size_t n);
  // sum |x[i] - y[i]|^2
  double (*frob_diff_sq)(const cdouble* x, const cdouble* y, size_t n);
  const char* name;
};

const Ops& active();
const Ops& scalar_ops();
// nullptr when the instruction set is unavailable on this build/host
const Ops* avx2_ops();
const Ops* neon_ops();

// Force a variant by name ("scalar", "avx2", "neon"); throws if unavailable.
void select(const std::string& name);

}  // namespace braidprob::kernels

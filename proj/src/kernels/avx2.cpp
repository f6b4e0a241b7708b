#include "braidprob/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BRAIDPROB_X86 1
#include <immintrin.h>
#endif

namespace braidprob::kernels {

#if defined(BRAIDPROB_X86) && defined(__AVX2__) && defined(__FMA__)

namespace {

// Complex product accumulation split into two real FMA streams:
//   acc_re += ar * b,  acc_im += ai * swap(b)
// and combined once per row block with addsub, giving
//   (ar*br - ai*bi, ar*bi + ai*br).
void matmul_avx2(cdouble* c, const cdouble* a, const cdouble* b, size_t n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const size_t reals = 2 * n;
  for (size_t i = 0; i < n; ++i) {
    double* crow = cd + i * reals;
    size_t j = 0;
    for (; j + 4 <= reals; j += 4) _mm256_storeu_pd(crow + j, _mm256_setzero_pd());
    for (; j < reals; ++j) crow[j] = 0.0;
    for (size_t k = 0; k < n; ++k) {
      cdouble aik = a[i * n + k];
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      __m256d ar = _mm256_set1_pd(aik.real());
      __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = bd + k * reals;
      size_t r = 0;
      for (; r + 8 <= reals; r += 8) {
        __m256d b0 = _mm256_loadu_pd(brow + r);
        __m256d b1 = _mm256_loadu_pd(brow + r + 4);
        __m256d s0 = _mm256_permute_pd(b0, 0x5);
        __m256d s1 = _mm256_permute_pd(b1, 0x5);
        __m256d c0 = _mm256_loadu_pd(crow + r);
        __m256d c1 = _mm256_loadu_pd(crow + r + 4);
        c0 = _mm256_add_pd(c0, _mm256_addsub_pd(_mm256_mul_pd(ar, b0), _mm256_mul_pd(ai, s0)));
        c1 = _mm256_add_pd(c1, _mm256_addsub_pd(_mm256_mul_pd(ar, b1), _mm256_mul_pd(ai, s1)));
        _mm256_storeu_pd(crow + r, c0);
        _mm256_storeu_pd(crow + r + 4, c1);
      }
      for (; r + 4 <= reals; r += 4) {
        __m256d b0 = _mm256_loadu_pd(brow + r);
        __m256d s0 = _mm256_permute_pd(b0, 0x5);
        __m256d c0 = _mm256_loadu_pd(crow + r);
        c0 = _mm256_add_pd(c0, _mm256_addsub_pd(_mm256_mul_pd(ar, b0), _mm256_mul_pd(ai, s0)));
        _mm256_storeu_pd(crow + r, c0);
      }
      for (; r < reals; r += 2) {
        double br = brow[r], bi = brow[r + 1];
        crow[r] += aik.real() * br - aik.imag() * bi;
        crow[r + 1] += aik.real() * bi + aik.imag() * br;
      }
    }
  }
}

void axpy_avx2(cdouble* y, cdouble alpha, const cdouble* x, size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const size_t reals = 2 * n;
  __m256d ar = _mm256_set1_pd(alpha.real());
  __m256d ai = _mm256_set1_pd(alpha.imag());
  size_t r = 0;
  for (; r + 4 <= reals; r += 4) {
    __m256d xv = _mm256_loadu_pd(xd + r);
    __m256d sv = _mm256_permute_pd(xv, 0x5);
    __m256d yv = _mm256_loadu_pd(yd + r);
    yv = _mm256_add_pd(yv, _mm256_addsub_pd(_mm256_mul_pd(ar, xv), _mm256_mul_pd(ai, sv)));
    _mm256_storeu_pd(yd + r, yv);
  }
  for (; r < reals; r += 2) {
    double xr = xd[r], xi = xd[r + 1];
    yd[r] += alpha.real() * xr - alpha.imag() * xi;
    yd[r + 1] += alpha.real() * xi + alpha.imag() * xr;
  }
}

cdouble dot_avx2(const cdouble* x, const cdouble* y, size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  const size_t reals = 2 * n;
  // conj(x)*y: re += xr*yr + xi*yi ; im += xr*yi - xi*yr
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  size_t r = 0;
  for (; r + 4 <= reals; r += 4) {
    __m256d xv = _mm256_loadu_pd(xd + r);
    __m256d yv = _mm256_loadu_pd(yd + r);
    __m256d ys = _mm256_permute_pd(yv, 0x5);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(xv, ys, acc_im);
  }
  alignas(32) double re4[4], im4[4];
  _mm256_store_pd(re4, acc_re);
  _mm256_store_pd(im4, acc_im);
  double re = re4[0] + re4[1] + re4[2] + re4[3];
  double im = (im4[0] - im4[1]) + (im4[2] - im4[3]);
  for (; r < reals; r += 2) {
    re += xd[r] * yd[r] + xd[r + 1] * yd[r + 1];
    im += xd[r] * yd[r + 1] - xd[r + 1] * yd[r];
  }
  return {re, im};
}

double frob_diff_sq_avx2(const cdouble* x, const cdouble* y, size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  const size_t reals = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  size_t r = 0;
  for (; r + 4 <= reals; r += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(xd + r), _mm256_loadu_pd(yd + r));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  alignas(32) double a4[4];
  _mm256_store_pd(a4, acc);
  double s = a4[0] + a4[1] + a4[2] + a4[3];
  for (; r < reals; ++r) {
    double d = xd[r] - yd[r];
    s += d * d;
  }
  return s;
}

}  // namespace

const Ops* avx2_ops() {
  if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
  static const Ops ops{matmul_avx2, axpy_avx2, dot_avx2, frob_diff_sq_avx2, "avx2"};
  return &ops;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif

}  // namespace braidprob::kernels

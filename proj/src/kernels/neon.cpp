#include "braidprob/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)
#define BRAIDPROB_NEON 1
#include <arm_neon.h>
#endif

namespace braidprob::kernels {

#ifdef BRAIDPROB_NEON

namespace {

// One complex per 128-bit register: [re, im].
void matmul_neon(cdouble* c, const cdouble* a, const cdouble* b, size_t n) {
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
  const size_t reals = 2 * n;
  for (size_t i = 0; i < n; ++i) {
    double* crow = cd + i * reals;
    for (size_t r = 0; r < reals; ++r) crow[r] = 0.0;
    for (size_t k = 0; k < n; ++k) {
      cdouble aik = a[i * n + k];
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      float64x2_t ar = vdupq_n_f64(aik.real());
      float64x2_t ai = vdupq_n_f64(aik.imag());
      float64x2_t sgn = {-1.0, 1.0};
      const double* brow = bd + k * reals;
      for (size_t r = 0; r + 2 <= reals; r += 2) {
        float64x2_t bv = vld1q_f64(brow + r);
        float64x2_t sv = vmulq_f64(vextq_f64(bv, bv, 1), sgn);  // (-bi, br)
        float64x2_t cv = vld1q_f64(crow + r);
        cv = vfmaq_f64(cv, ar, bv);
        cv = vfmaq_f64(cv, ai, sv);
        vst1q_f64(crow + r, cv);
      }
    }
  }
}

void axpy_neon(cdouble* y, cdouble alpha, const cdouble* x, size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  float64x2_t ar = vdupq_n_f64(alpha.real());
  float64x2_t ai = vdupq_n_f64(alpha.imag());
  float64x2_t sgn = {-1.0, 1.0};
  for (size_t r = 0; r + 2 <= 2 * n; r += 2) {
    float64x2_t xv = vld1q_f64(xd + r);
    float64x2_t sv = vmulq_f64(vextq_f64(xv, xv, 1), sgn);
    float64x2_t yv = vld1q_f64(yd + r);
    yv = vfmaq_f64(yv, ar, xv);
    yv = vfmaq_f64(yv, ai, sv);
    vst1q_f64(yd + r, yv);
  }
}

cdouble dot_neon(const cdouble* x, const cdouble* y, size_t n) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

double frob_diff_sq_neon(const cdouble* x, const cdouble* y, size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t r = 0;
  for (; r + 2 <= 2 * n; r += 2) {
    float64x2_t d = vsubq_f64(vld1q_f64(xd + r), vld1q_f64(yd + r));
    acc = vfmaq_f64(acc, d, d);
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; r < 2 * n; ++r) {
    double d = xd[r] - yd[r];
    s += d * d;
  }
  return s;
}

}  // namespace

const Ops* neon_ops() {
  static const Ops ops{matmul_neon, axpy_neon, dot_neon, frob_diff_sq_neon, "neon"};
  return &ops;
}

#else

const Ops* neon_ops() { return nullptr; }

#endif

}  // namespace braidprob::kernels

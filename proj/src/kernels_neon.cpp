#include "dcx/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace dcx::kernels::neon {

namespace {

// One complex element per vector. addsub is emulated by an exact sign flip
// on the subtracted lane, which keeps the rounding identical to scalar.
inline float64x2_t cmul(float64x2_t ar, float64x2_t ai, float64x2_t v) {
  const float64x2_t t1 = vmulq_f64(ar, v);
  const float64x2_t sw = vextq_f64(v, v, 1);
  const float64x2_t sign = {-1.0, 1.0};
  const float64x2_t t2 = vmulq_f64(vmulq_f64(ai, sw), sign);
  return vaddq_f64(t1, t2);
}

}  // namespace

void caxpy(std::size_t n, const double* a, const double* x, double* y) {
  const float64x2_t ar = vdupq_n_f64(a[0]);
  const float64x2_t ai = vdupq_n_f64(a[1]);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t vx = vld1q_f64(x + 2 * k);
    const float64x2_t vy = vld1q_f64(y + 2 * k);
    vst1q_f64(y + 2 * k, vaddq_f64(vy, cmul(ar, ai, vx)));
  }
}

void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b) {
  const float64x2_t vc = vdupq_n_f64(c);
  const float64x2_t ar = vdupq_n_f64(a[0]);
  const float64x2_t ai = vdupq_n_f64(a[1]);
  const float64x2_t br = vdupq_n_f64(b[0]);
  const float64x2_t bi = vdupq_n_f64(b[1]);
  for (std::size_t k = 0; k < n; ++k) {
    const float64x2_t vx = vld1q_f64(x + 2 * k);
    const float64x2_t vy = vld1q_f64(y + 2 * k);
    const float64x2_t tx = vaddq_f64(vmulq_f64(vc, vx), cmul(ar, ai, vy));
    const float64x2_t ty = vaddq_f64(cmul(br, bi, vx), vmulq_f64(vc, vy));
    vst1q_f64(x + 2 * k, tx);
    vst1q_f64(y + 2 * k, ty);
  }
}

double sumsq(std::size_t n, const double* x) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const float64x2_t v = vld1q_f64(x + k);
    acc = vaddq_f64(acc, vmulq_f64(v, v));
  }
  double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; k < n; ++k) {
    s += x[k] * x[k];
  }
  return s;
}

}  // namespace dcx::kernels::neon

#endif  // __aarch64__

#include "dcx/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dcx::kernels::avx2 {

bool supported() { return __builtin_cpu_supports("avx2") != 0; }

namespace {

// Complex multiply of (ar, ai) against two interleaved complex lanes.
// mul/mul/addsub rounds exactly like the scalar re/im expressions, so no
// FMA here on purpose.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d v) {
  const __m256d t1 = _mm256_mul_pd(ar, v);
  const __m256d sw = _mm256_permute_pd(v, 0x5);
  const __m256d t2 = _mm256_mul_pd(ai, sw);
  return _mm256_addsub_pd(t1, t2);
}

}  // namespace

void caxpy(std::size_t n, const double* a, const double* x, double* y) {
  const __m256d ar = _mm256_set1_pd(a[0]);
  const __m256d ai = _mm256_set1_pd(a[1]);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * k);
    const __m256d vy = _mm256_loadu_pd(y + 2 * k);
    _mm256_storeu_pd(y + 2 * k, _mm256_add_pd(vy, cmul(ar, ai, vx)));
  }
  if (k < n) {
    scalar::caxpy(n - k, a, x + 2 * k, y + 2 * k);
  }
}

void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d ar = _mm256_set1_pd(a[0]);
  const __m256d ai = _mm256_set1_pd(a[1]);
  const __m256d br = _mm256_set1_pd(b[0]);
  const __m256d bi = _mm256_set1_pd(b[1]);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * k);
    const __m256d vy = _mm256_loadu_pd(y + 2 * k);
    const __m256d tx = _mm256_add_pd(_mm256_mul_pd(vc, vx), cmul(ar, ai, vy));
    const __m256d ty = _mm256_add_pd(cmul(br, bi, vx), _mm256_mul_pd(vc, vy));
    _mm256_storeu_pd(x + 2 * k, tx);
    _mm256_storeu_pd(y + 2 * k, ty);
  }
  if (k < n) {
    scalar::crot(n - k, x + 2 * k, y + 2 * k, c, a, b);
  }
}

double sumsq(std::size_t n, const double* x) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d v = _mm256_loadu_pd(x + k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < n; ++k) {
    s += x[k] * x[k];
  }
  return s;
}

}  // namespace dcx::kernels::avx2

#endif  // x86_64

#pragma once

#include <cstddef>
#include <string_view>

// Arithmetic inner loops used by the matrix layer. Each kernel has a scalar
// reference implementation and SIMD variants selected at runtime; the
// variants in use are reachable through the dispatch pointers below.
//
// Complex spans are interleaved (re, im) doubles; `n` counts complex
// elements. caxpy and crot perform the same per-element operation sequence
// in every backend and therefore produce bit-identical results (the library
// is built with FP contraction off so the scalar path cannot fuse into FMA).
// sumsq reduces in backend-specific order and agrees only up to roundoff.

namespace dcx::kernels {

// y[k] += a * x[k] over n complex elements. a points at (re, im).
using CaxpyFn = void (*)(std::size_t n, const double* a, const double* x,
                         double* y);

// (x[k], y[k]) <- (c*x[k] + a*y[k], b*x[k] + c*y[k]) over n complex
// elements; c real, a and b complex. Both outputs use the pre-update values.
using CrotFn = void (*)(std::size_t n, double* x, double* y, double c,
                        const double* a, const double* b);

// Sum of x[k]^2 over n doubles.
using SumsqFn = double (*)(std::size_t n, const double* x);

extern CaxpyFn caxpy;
extern CrotFn crot;
extern SumsqFn sumsq;

// Name of the backend the dispatch table currently points at.
const char* backend();

// Force a backend by name ("scalar", "avx2", "neon"). Returns false and
// leaves the table unchanged if the backend is unknown or unsupported on
// this CPU. Not safe concurrently with running kernels; intended for tests.
// The DCX_KERNELS environment variable applies the same override at startup.
bool select_backend(std::string_view name);

namespace scalar {
void caxpy(std::size_t n, const double* a, const double* x, double* y);
void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b);
double sumsq(std::size_t n, const double* x);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
void caxpy(std::size_t n, const double* a, const double* x, double* y);
void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b);
double sumsq(std::size_t n, const double* x);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void caxpy(std::size_t n, const double* a, const double* x, double* y);
void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b);
double sumsq(std::size_t n, const double* x);
}  // namespace neon
#endif

}  // namespace dcx::kernels

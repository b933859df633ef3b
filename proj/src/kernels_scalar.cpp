#include "dcx/kernels.hpp"

// Reference kernels. The complex multiply is spelled out as
// (re, im) -> (ar*xr - ai*xi, ar*xi + ai*xr) with one rounding per
// operation; the SIMD backends replicate this sequence exactly.

namespace dcx::kernels::scalar {

void caxpy(std::size_t n, const double* a, const double* x, double* y) {
  const double ar = a[0];
  const double ai = a[1];
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    y[2 * k] += ar * xr - ai * xi;
    y[2 * k + 1] += ar * xi + ai * xr;
  }
}

void crot(std::size_t n, double* x, double* y, double c, const double* a,
          const double* b) {
  const double ar = a[0];
  const double ai = a[1];
  const double br = b[0];
  const double bi = b[1];
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[2 * k];
    const double xi = x[2 * k + 1];
    const double yr = y[2 * k];
    const double yi = y[2 * k + 1];
    x[2 * k] = c * xr + (ar * yr - ai * yi);
    x[2 * k + 1] = c * xi + (ar * yi + ai * yr);
    y[2 * k] = (br * xr - bi * xi) + c * yr;
    y[2 * k + 1] = (br * xi + bi * xr) + c * yi;
  }
}

double sumsq(std::size_t n, const double* x) {
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    acc += x[k] * x[k];
  }
  return acc;
}

}  // namespace dcx::kernels::scalar

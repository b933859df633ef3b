#include "dcx/lift.hpp"

#include <algorithm>
#include <string>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

void require_square(const RealMatrix& a, const char* op) {
  if (!a.square()) {
    throw ShapeError(std::string(op) + ": input must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_square(const ComplexMatrix& x, const char* op) {
  if (!x.square()) {
    throw ShapeError(std::string(op) + ": input must be square, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

}  // namespace

ComplexMatrix lift_real(const RealMatrix& a) {
  require_square(a, "lift_real");
  const std::size_t n = a.rows();
  ComplexMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = cplx(a(i, j), a(j, i));
    }
  }
  return x;
}

ComplexMatrix lift_imag(const RealMatrix& a) {
  require_square(a, "lift_imag");
  const std::size_t n = a.rows();
  ComplexMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = cplx(a(j, i), a(i, j));
    }
  }
  return x;
}

bool is_normal(const ComplexMatrix& x, double tol) {
  require_square(x, "is_normal");
  if (tol < 0.0) throw ArgumentError("is_normal: tol must be >= 0");
  const ComplexMatrix xs = conj_transpose(x);
  const double dev = frobenius_norm(sub(matmul(x, xs), matmul(xs, x)));
  const double nx = frobenius_norm(x);
  return dev <= tol * std::max(1.0, nx * nx);
}

bool check_quarter_turn(const ComplexMatrix& x, double tol) {
  require_square(x, "check_quarter_turn");
  // X* + iX entrywise; no products needed.
  const std::size_t n = x.rows();
  ComplexMatrix dev(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dev(i, j) = std::conj(x(j, i)) + cplx(0.0, 1.0) * x(i, j);
    }
  }
  return frobenius_norm(dev) <= tol * std::max(1.0, frobenius_norm(x));
}

}  // namespace dcx

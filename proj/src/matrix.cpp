#include "dcx/matrix.hpp"

#include <cmath>
#include <utility>

#include "dcx/kernels.hpp"

namespace dcx {

namespace {

void check_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw ArgumentError("matrix entries must be finite");
    }
  }
}

void check_finite(const std::vector<cplx>& v) {
  for (const cplx& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ArgumentError("matrix entries must be finite");
    }
  }
}

void check_same_shape(std::size_t ar, std::size_t ac, std::size_t br,
                      std::size_t bc) {
  if (ar != br || ac != bc) {
    throw ShapeError("matrix shapes do not match");
  }
}

}  // namespace

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("entry count does not match rows*cols");
  }
  check_finite(entries_);
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("entry count does not match rows*cols");
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = cplx(1.0, 0.0);
  }
  return m;
}

ComplexMatrix conj_transpose(const ComplexMatrix& m) {
  ComplexMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(j, i) = std::conj(m(i, j));
    }
  }
  return r;
}

RealMatrix transpose(const RealMatrix& m) {
  RealMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      r(j, i) = m(i, j);
    }
  }
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions do not match");
  }
  ComplexMatrix c(a.rows(), b.cols());
  const std::size_t inner = a.cols();
  const std::size_t width = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double* crow = c.raw() + 2 * i * width;
    for (std::size_t k = 0; k < inner; ++k) {
      const cplx aik = a(i, k);
      const double coeff[2] = {aik.real(), aik.imag()};
      kernels::caxpy(width, coeff, b.raw() + 2 * k * width, crow);
    }
  }
  return c;
}

RealMatrix matmul(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions do not match");
  }
  RealMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

double frobenius_norm(const ComplexMatrix& m) {
  return std::sqrt(kernels::sumsq(2 * m.size(), m.raw()));
}

double frobenius_norm(const RealMatrix& m) {
  return std::sqrt(kernels::sumsq(m.size(), m.data()));
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) {
    r.data()[k] = cplx(m.data()[k], 0.0);
  }
  return r;
}

RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) {
    r.data()[k] = m.data()[k].real();
  }
  return r;
}

RealMatrix imag_part(const ComplexMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) {
    r.data()[k] = m.data()[k].imag();
  }
  return r;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r.data()[k] = a.data()[k] + b.data()[k];
  }
  return r;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r.data()[k] = a.data()[k] - b.data()[k];
  }
  return r;
}

RealMatrix add(const RealMatrix& a, const RealMatrix& b) {
  check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r.data()[k] = a.data()[k] + b.data()[k];
  }
  return r;
}

RealMatrix sub(const RealMatrix& a, const RealMatrix& b) {
  check_same_shape(a.rows(), a.cols(), b.rows(), b.cols());
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) {
    r.data()[k] = a.data()[k] - b.data()[k];
  }
  return r;
}

ComplexMatrix scale(const ComplexMatrix& m, cplx factor) {
  ComplexMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) {
    r.data()[k] = m.data()[k] * factor;
  }
  return r;
}

RealMatrix scale(const RealMatrix& m, double factor) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t k = 0; k < m.size(); ++k) {
    r.data()[k] = m.data()[k] * factor;
  }
  return r;
}

}  // namespace dcx

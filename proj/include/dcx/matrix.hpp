#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dcx/errors.hpp"

namespace dcx {

using cplx = std::complex<double>;

// Row-major dense real matrix. Construction from user data validates that
// every entry is finite. Zero-sized dimensions are allowed so that rank-0
// decompositions have a natural representation; the text file format is
// stricter and requires at least one row and column.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols);
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  static RealMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const double* data() const noexcept { return entries_.data(); }
  double* data() noexcept { return entries_.data(); }
  const std::vector<double>& entries() const noexcept { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Row-major dense complex matrix, entries stored as (re, im) pairs.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<cplx> entries);
  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool square() const noexcept { return rows_ == cols_; }

  cplx operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  cplx& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  const cplx* data() const noexcept { return entries_.data(); }
  cplx* data() noexcept { return entries_.data(); }
  const std::vector<cplx>& entries() const noexcept { return entries_; }

  // Interleaved (re, im) view for the kernel layer.
  const double* raw() const noexcept {
    return reinterpret_cast<const double*>(entries_.data());
  }
  double* raw() noexcept { return reinterpret_cast<double*>(entries_.data()); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

// result[j][i] = conj(m[i][j])
ComplexMatrix conj_transpose(const ComplexMatrix& m);
RealMatrix transpose(const RealMatrix& m);

// Standard product. The sum over the inner index is accumulated
// left-to-right for every output entry, so results are reproducible on a
// given platform.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix matmul(const RealMatrix& a, const RealMatrix& b);

// sqrt of the sum of squared moduli; exactly 0 for the zero matrix.
double frobenius_norm(const ComplexMatrix& m);
double frobenius_norm(const RealMatrix& m);

ComplexMatrix to_complex(const RealMatrix& m);
RealMatrix real_part(const ComplexMatrix& m);
RealMatrix imag_part(const ComplexMatrix& m);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix add(const RealMatrix& a, const RealMatrix& b);
RealMatrix sub(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix scale(const ComplexMatrix& m, cplx factor);
RealMatrix scale(const RealMatrix& m, double factor);

}  // namespace dcx

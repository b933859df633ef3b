#include "dcx/signrank.hpp"

#include <cmath>
#include <string>

#include "dcx/errors.hpp"

namespace dcx {

SignMatrix::SignMatrix(std::size_t rows, std::size_t cols,
                       std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ArgumentError("SignMatrix: entry count " +
                        std::to_string(entries_.size()) + " does not match " +
                        std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] != 1 && entries_[k] != -1) {
      throw ArgumentError("SignMatrix: entry " + std::to_string(k / cols_) +
                          "," + std::to_string(k % cols_) +
                          " is not -1 or +1");
    }
  }
}

RealMatrix SignMatrix::to_real() const {
  std::vector<double> v(entries_.begin(), entries_.end());
  return RealMatrix(rows_, cols_, std::move(v));
}

SignMatrix sign_of(const RealMatrix& a, double zero_tol, SignMode mode) {
  if (zero_tol < 0.0) throw ArgumentError("sign_of: zero_tol must be >= 0");
  std::vector<std::int8_t> out(a.size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double v = a(i, j);
      if (std::abs(v) <= zero_tol) {
        if (mode == SignMode::strict) {
          throw DegenerateSignError(
              "sign_of: entry (" + std::to_string(i) + "," +
                  std::to_string(j) + ") = " + std::to_string(v) +
                  " is within zero_tol in strict mode",
              i, j, v);
        }
        out[i * a.cols() + j] = 1;
      } else {
        out[i * a.cols() + j] = v < 0.0 ? -1 : 1;
      }
    }
  }
  return SignMatrix(a.rows(), a.cols(), std::move(out));
}

SignReconstruction reconstruct_sign(const RealMatrix& witness, double zero_tol,
                                    double rank_tol) {
  if (!witness.square()) {
    throw ShapeError("reconstruct_sign: witness must be square, got " +
                     std::to_string(witness.rows()) + "x" +
                     std::to_string(witness.cols()));
  }
  // Gate first so degenerate witnesses fail before any numerics run.
  (void)sign_of(witness, zero_tol, SignMode::strict);

  SignReconstruction out;
  out.decomp = diagonalize_rank_bounded(witness, rank_tol);
  const RealMatrix recon = reconstruct_real(out.decomp);
  const double guard = 10.0 * frobenius_norm(sub(recon, witness));
  for (std::size_t i = 0; i < recon.rows(); ++i) {
    for (std::size_t j = 0; j < recon.cols(); ++j) {
      if (std::abs(recon(i, j)) <= guard) {
        throw SignAmbiguityError(
            "reconstruct_sign: entry (" + std::to_string(i) + "," +
                std::to_string(j) + ") = " + std::to_string(recon(i, j)) +
                " lies within the residual guard band " +
                std::to_string(guard),
            i, j, recon(i, j), guard);
      }
    }
  }
  out.sign = sign_of(recon, 0.0, SignMode::strict);
  return out;
}

bool rank1_sign_feasible(const SignMatrix& y) {
  if (!y.square()) {
    throw ShapeError("rank1_sign_feasible: input must be square, got " +
                     std::to_string(y.rows()) + "x" + std::to_string(y.cols()));
  }
  for (std::size_t i = 1; i < y.rows(); ++i) {
    if (y(i, i) != y(0, 0)) return false;
  }
  return true;
}

}  // namespace dcx

#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "dcx/decomp.hpp"
#include "dcx/matrix.hpp"

namespace dcx {

// Dense matrix over {-1, +1}. Construction rejects anything else.
class SignMatrix {
 public:
  SignMatrix() = default;
  SignMatrix(std::size_t rows, std::size_t cols,
             std::vector<std::int8_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  // Entries widened to +/-1.0, for norms and fitting targets.
  RealMatrix to_real() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> entries_;
};

enum class SignMode { strict, lenient };

// Entrywise sign. Entries with |a_ij| <= zero_tol throw DegenerateSignError
// in strict mode and map to +1 in lenient mode.
SignMatrix sign_of(const RealMatrix& a, double zero_tol, SignMode mode);

struct SignReconstruction {
  SignMatrix sign;
  UnitaryDiag decomp;
};

// Rank-bounded decomposition of a sign witness plus the sign pattern of its
// reconstruction. The witness must pass the strict sign gate; entries of the
// reconstruction whose magnitude is within 10x the reconstruction residual
// throw SignAmbiguityError instead of being signed. The returned pattern
// always equals sign_of(witness) and decomp.r <= 2 * numerical_rank(witness).
SignReconstruction reconstruct_sign(const RealMatrix& witness,
                                    double zero_tol = 0.0,
                                    double rank_tol = 1e-10);

// Necessary condition for a rank-1 unitary-diagonalization realization of Y:
// with r = 1, Re(x_ii) = Re(lambda)|s_i|^2, so every diagonal sign must
// agree. True iff all diagonal entries of Y are equal.
bool rank1_sign_feasible(const SignMatrix& y);

}  // namespace dcx

#pragma once

#include "dcx/matrix.hpp"

namespace dcx {

// X = A + i*A^T. X is normal, Re(X) = A and Im(X) = A^T exactly; the
// construction copies entries and never rounds.
ComplexMatrix lift_real(const RealMatrix& a);

// X = A^T + i*A, the variant with Im(X) = A exactly.
ComplexMatrix lift_imag(const RealMatrix& a);

// true iff ||X X* - X* X||_F <= tol * max(1, ||X||_F^2).
bool is_normal(const ComplexMatrix& x, double tol);

// true iff ||X* + iX||_F <= tol * max(1, ||X||_F), i.e. X satisfies the
// lift identity X* = -iX. Every matrix produced by lift_real does, which
// is what makes e^{-i pi/4} X Hermitian.
bool check_quarter_turn(const ComplexMatrix& x, double tol);

}  // namespace dcx

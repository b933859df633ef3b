#pragma once

#include <vector>

#include "dcx/decomp.hpp"
#include "dcx/matrix.hpp"

namespace dcx {

// Eigendecomposition H = U diag(d) U* of a Hermitian matrix, d ascending.
struct HermitianEig {
  ComplexMatrix U;
  std::vector<double> d;
};

// H = e^{-i pi/4} X. For any X with X* = -iX (checked at tolerance 1e-10)
// the result is Hermitian, which reduces diagonalizing the normal lift to a
// Hermitian eigenproblem.
ComplexMatrix hermitian_from_lift(const ComplexMatrix& x);

// Cyclic-by-row complex Jacobi. Sweeps until the off-diagonal Frobenius
// norm drops to tol*||H||_F; throws ConvergenceError with the residual if
// max_sweeps is exhausted first, PreconditionError if H is not Hermitian
// within tol.
HermitianEig eigh(const ComplexMatrix& h, int max_sweeps = 30,
                  double tol = 1e-12);

// eigh that also records the off-diagonal norm before the first sweep and
// after each sweep; the sequence is non-increasing.
HermitianEig eigh_traced(const ComplexMatrix& h, int max_sweeps, double tol,
                         std::vector<double>& off_trace);

// Diagonalize a normal lift X: rotate to Hermitian, solve, rotate back.
// Eigenvalues come out as e^{i pi/4} * d_j, all on the quarter-turn line,
// ordered ascending in d.
UnitaryDiag eig_normal_lift(const ComplexMatrix& x);

}  // namespace dcx

#pragma once

#include <cstddef>
#include <vector>

#include "dcx/matrix.hpp"

namespace dcx {

// Truncatable unitary diagonalization: S is n-by-r with orthonormal columns,
// lambda holds the r retained diagonal entries. When produced from a lift,
// every lambda_j lies on the line t*e^{i pi/4}, t real.
struct UnitaryDiag {
  ComplexMatrix S;
  std::vector<cplx> lambda;
  std::size_t n = 0;
  std::size_t r = 0;
};

// Full decomposition A = Re(S Lambda S*) of a real square matrix, r = n.
UnitaryDiag unitary_diagonalize(const RealMatrix& a);

// S diag(lambda) S* as a complex matrix. Its real part reconstructs the
// input of unitary_diagonalize, its imaginary part the input's transpose.
ComplexMatrix reconstruct_complex(const UnitaryDiag& d);
RealMatrix reconstruct_real(const UnitaryDiag& d);

// Keep the r_keep eigenpairs of largest |lambda|, ties broken by ascending
// original index. Retained columns stay in their original order.
UnitaryDiag truncate(const UnitaryDiag& d, std::size_t r_keep);

// Full decomposition truncated to eigenvalues with |lambda| > tol*max|lambda|.
// For a rank-k input this keeps at most 2k columns.
UnitaryDiag diagonalize_rank_bounded(const RealMatrix& a, double tol = 1e-10);

}  // namespace dcx

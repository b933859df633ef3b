#pragma once

#include <cstddef>

#include "dcx/matrix.hpp"

namespace dcx {

// Number of singular values strictly greater than
// tol * max(rows, cols) * sigma_max; 0 for the zero matrix. Singular values
// are square roots of the eigenvalues of the smaller Gram matrix, computed
// with the Hermitian Jacobi solver.
std::size_t numerical_rank(const ComplexMatrix& m, double tol);
std::size_t numerical_rank(const RealMatrix& m, double tol);

}  // namespace dcx

#include "dcx/rank.hpp"

#include <algorithm>
#include <cmath>

#include "dcx/eig.hpp"
#include "dcx/errors.hpp"

namespace dcx {

namespace {

// Singular values of M are square roots of the eigenvalues of the smaller
// Gram matrix. matmul accumulates deterministically left-to-right, which
// makes M*M exactly Hermitian, so eigh accepts it directly.
std::size_t rank_of_gram(const ComplexMatrix& m, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("numerical_rank: tol must be > 0");
  if (m.size() == 0) return 0;

  const ComplexMatrix ms = conj_transpose(m);
  const ComplexMatrix gram =
      m.cols() <= m.rows() ? matmul(ms, m) : matmul(m, ms);
  const HermitianEig e = eigh(gram);

  double smax = 0.0;
  std::vector<double> sv(e.d.size());
  for (std::size_t i = 0; i < e.d.size(); ++i) {
    sv[i] = std::sqrt(std::max(e.d[i], 0.0));
    smax = std::max(smax, sv[i]);
  }
  if (smax == 0.0) return 0;

  const double gate =
      tol * static_cast<double>(std::max(m.rows(), m.cols())) * smax;
  std::size_t r = 0;
  for (double s : sv) {
    if (s > gate) ++r;
  }
  return r;
}

}  // namespace

std::size_t numerical_rank(const ComplexMatrix& m, double tol) {
  return rank_of_gram(m, tol);
}

std::size_t numerical_rank(const RealMatrix& m, double tol) {
  return rank_of_gram(to_complex(m), tol);
}

}  // namespace dcx

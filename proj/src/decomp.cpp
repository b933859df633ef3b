#include "dcx/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dcx/eig.hpp"
#include "dcx/errors.hpp"
#include "dcx/lift.hpp"

namespace dcx {

UnitaryDiag unitary_diagonalize(const RealMatrix& a) {
  if (!a.square()) {
    throw ShapeError("unitary_diagonalize: input must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  return eig_normal_lift(lift_real(a));
}

ComplexMatrix reconstruct_complex(const UnitaryDiag& d) {
  if (d.r == 0) return ComplexMatrix(d.n, d.n);
  // S diag(lambda) as a column scaling, then times S*.
  ComplexMatrix sl = d.S;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = 0; j < d.r; ++j) {
      sl(i, j) *= d.lambda[j];
    }
  }
  return matmul(sl, conj_transpose(d.S));
}

RealMatrix reconstruct_real(const UnitaryDiag& d) {
  return real_part(reconstruct_complex(d));
}

UnitaryDiag truncate(const UnitaryDiag& d, std::size_t r_keep) {
  if (r_keep < 1 || r_keep > d.r) {
    throw ArgumentError("truncate: r_keep must be in [1, " +
                        std::to_string(d.r) + "], got " +
                        std::to_string(r_keep));
  }
  // Largest |lambda| first, ties by ascending original index; the retained
  // set is then restored to original column order.
  std::vector<std::size_t> order(d.r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(d.lambda[x]) > std::abs(d.lambda[y]);
  });
  order.resize(r_keep);
  std::sort(order.begin(), order.end());

  UnitaryDiag out;
  out.n = d.n;
  out.r = r_keep;
  out.S = ComplexMatrix(d.n, r_keep);
  out.lambda.resize(r_keep);
  for (std::size_t j = 0; j < r_keep; ++j) {
    out.lambda[j] = d.lambda[order[j]];
    for (std::size_t i = 0; i < d.n; ++i) {
      out.S(i, j) = d.S(i, order[j]);
    }
  }
  return out;
}

UnitaryDiag diagonalize_rank_bounded(const RealMatrix& a, double tol) {
  if (!(tol > 0.0)) {
    throw ArgumentError("diagonalize_rank_bounded: tol must be > 0");
  }
  UnitaryDiag full = unitary_diagonalize(a);
  double lmax = 0.0;
  for (const cplx& l : full.lambda) lmax = std::max(lmax, std::abs(l));

  std::size_t keep = 0;
  for (const cplx& l : full.lambda) {
    if (std::abs(l) > tol * lmax) ++keep;
  }
  if (keep == 0) {
    // Numerically zero input: empty decomposition of the ambient size.
    UnitaryDiag out;
    out.n = full.n;
    out.r = 0;
    out.S = ComplexMatrix(full.n, 0);
    return out;
  }
  if (keep == full.r) return full;
  return truncate(full, keep);
}

}  // namespace dcx

#include "dcx/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "dcx/errors.hpp"
#include "dcx/kernels.hpp"
#include "dcx/lift.hpp"

namespace dcx {

namespace {

// 1/sqrt(2); halving sqrt2 is exact so this equals the correctly rounded value.
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

// sqrt(2 * sum of |a_pq|^2 over p < q). Computed with a plain left-to-right
// loop so the sweep control flow does not depend on the kernel backend.
double off_norm(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double acc = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      acc += std::norm(a(p, q));
    }
  }
  return std::sqrt(2.0 * acc);
}

// One cyclic sweep of plane rotations. a is kept exactly Hermitian with the
// real diagonal mirrored in diag; w accumulates U^T row-wise. Rotations with
// |a_pq| <= skip_below are skipped; if every pair in a sweep is skipped the
// off-diagonal norm is already below half the convergence threshold.
void sweep(ComplexMatrix& a, std::vector<double>& diag, ComplexMatrix& w,
           double skip_below) {
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const cplx apq = a(p, q);
      const double b = std::abs(apq);
      if (b <= skip_below) continue;

      const double alpha = diag[p];
      const double gamma = diag[q];
      const cplx phase = apq / b;
      const double theta = (alpha - gamma) / (2.0 * b);
      // Smaller root of t^2 - 2*theta*t - 1 = 0, with sign(0) taken as +.
      double t;
      if (std::abs(theta) > 1e150) {
        t = -1.0 / (2.0 * theta);
      } else if (theta >= 0.0) {
        t = -1.0 / (theta + std::sqrt(theta * theta + 1.0));
      } else {
        t = 1.0 / (-theta + std::sqrt(theta * theta + 1.0));
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double sigma = t * c;
      const cplx s = sigma * phase;

      // Row update of the similarity transform; the column half follows
      // from hermiticity, so mirror instead of touching strided columns.
      const cplx ra = -s;
      const cplx rb = std::conj(s);
      kernels::crot(n, a.raw() + 2 * p * n, a.raw() + 2 * q * n, c,
                    reinterpret_cast<const double*>(&ra),
                    reinterpret_cast<const double*>(&rb));
      for (std::size_t i = 0; i < n; ++i) {
        if (i == p || i == q) continue;
        a(i, p) = std::conj(a(p, i));
        a(i, q) = std::conj(a(q, i));
      }
      // Closed forms for the 2x2 pivot block.
      diag[p] = alpha - t * b;
      diag[q] = gamma + t * b;
      a(p, p) = diag[p];
      a(q, q) = diag[q];
      a(p, q) = 0.0;
      a(q, p) = 0.0;

      // U <- U J, carried as rows of W = U^T.
      const cplx wa = -std::conj(s);
      const cplx wb = s;
      kernels::crot(n, w.raw() + 2 * p * n, w.raw() + 2 * q * n, c,
                    reinterpret_cast<const double*>(&wa),
                    reinterpret_cast<const double*>(&wb));
    }
  }
}

}  // namespace

ComplexMatrix hermitian_from_lift(const ComplexMatrix& x) {
  if (!x.square()) {
    throw ShapeError("hermitian_from_lift: input must be square, got " +
                     std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  if (!check_quarter_turn(x, 1e-10)) {
    throw PreconditionError(
        "hermitian_from_lift: input violates the quarter-turn identity "
        "X* = -iX, so e^{-i pi/4} X is not Hermitian");
  }
  return scale(x, cplx(kInvSqrt2, -kInvSqrt2));
}

HermitianEig eigh_traced(const ComplexMatrix& h, int max_sweeps, double tol,
                         std::vector<double>& off_trace) {
  if (!h.square()) {
    throw ShapeError("eigh: input must be square, got " +
                     std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
  if (max_sweeps < 1) throw ArgumentError("eigh: max_sweeps must be >= 1");
  if (!(tol > 0.0)) throw ArgumentError("eigh: tol must be > 0");

  const std::size_t n = h.rows();
  const double hnorm = frobenius_norm(h);
  {
    const double dev = frobenius_norm(sub(h, conj_transpose(h)));
    if (dev > tol * std::max(1.0, hnorm)) {
      throw PreconditionError("eigh: input is not Hermitian (||H - H*|| = " +
                              std::to_string(dev) + ")");
    }
  }

  HermitianEig out;
  out.U = ComplexMatrix::identity(n);
  out.d.assign(n, 0.0);
  if (n == 0 || hnorm == 0.0) {
    off_trace.push_back(0.0);
    return out;
  }

  // Exactly symmetrize so the Hermitian invariant holds bit-for-bit during
  // sweeps; for exactly-Hermitian input this reproduces the entries.
  ComplexMatrix a(n, n);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = h(i, i).real();
    a(i, i) = diag[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }

  ComplexMatrix w = ComplexMatrix::identity(n);  // rows are columns of U
  const double thresh = tol * hnorm;
  const double skip_below = thresh / (2.0 * static_cast<double>(n));

  double off = off_norm(a);
  off_trace.push_back(off);
  int sweeps = 0;
  while (off > thresh) {
    if (sweeps >= max_sweeps) {
      throw ConvergenceError(
          "eigh: off-diagonal norm " + std::to_string(off) +
              " above tolerance after " + std::to_string(max_sweeps) +
              " sweeps",
          off);
    }
    sweep(a, diag, w, skip_below);
    ++sweeps;
    off = off_norm(a);
    off_trace.push_back(off);
  }

  // Ascending eigenvalue order; U column j = W row order[j].
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });
  for (std::size_t j = 0; j < n; ++j) {
    out.d[j] = diag[order[j]];
    for (std::size_t i = 0; i < n; ++i) {
      out.U(i, j) = w(order[j], i);
    }
  }
  return out;
}

HermitianEig eigh(const ComplexMatrix& h, int max_sweeps, double tol) {
  std::vector<double> trace;
  return eigh_traced(h, max_sweeps, tol, trace);
}

UnitaryDiag eig_normal_lift(const ComplexMatrix& x) {
  const ComplexMatrix h = hermitian_from_lift(x);
  const HermitianEig e = eigh(h);
  const std::size_t n = x.rows();
  UnitaryDiag d;
  d.n = n;
  d.r = n;
  d.S = e.U;
  d.lambda.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    // e^{i pi/4} * d_j, kept on the quarter-turn line by construction.
    d.lambda[j] = cplx(kInvSqrt2 * e.d[j], kInvSqrt2 * e.d[j]);
  }
  return d;
}

}  // namespace dcx

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcx/matrix.hpp"
#include "dcx/signrank.hpp"

namespace dcx {

enum class Loss { squared, logistic };

struct FitConfig {
  std::size_t m = 1;              // model rank
  Loss loss = Loss::squared;
  double learning_rate = 0.05;
  std::size_t epochs = 2000;
  double l2 = 0.0;
  std::uint64_t seed = 0;
  double init_scale = 0.1;
};

// Relaxed factor model: predictions are Re(E diag(w) E*), the unconstrained
// counterpart of a truncated unitary diagonalization.
struct FitModel {
  ComplexMatrix E;          // n x m row embeddings
  std::vector<cplx> w;      // length-m diagonal weights
  std::size_t m = 0;
};

// Fitting target: a real matrix, or a sign pattern (required for logistic
// loss, allowed for squared).
class FitTarget {
 public:
  explicit FitTarget(const RealMatrix& values);
  explicit FitTarget(const SignMatrix& pattern);

  const RealMatrix& values() const noexcept { return values_; }
  bool is_sign() const noexcept { return is_sign_; }

 private:
  RealMatrix values_;
  bool is_sign_;
};

struct FitGradient {
  ComplexMatrix E;
  std::vector<cplx> w;
};

// predict[i][j] = Re( sum_c w_c * E[i][c] * conj(E[j][c]) ).
RealMatrix predict(const FitModel& model);

// Loss and its gradient, with (re, im) of every parameter treated as
// independent real variables (twice the conjugate Wirtinger derivative).
// squared: sum_ij (predict - A)^2 + l2*(||E||^2 + ||w||^2)
// logistic: sum_ij log(1 + exp(-Y_ij * predict_ij)) + l2*(...)
double loss_and_gradient(const FitModel& model, const FitTarget& target,
                         const FitConfig& config, FitGradient& grad);

struct FitResult {
  FitModel model;
  std::vector<double> loss_trace;  // epochs + 1 entries, final loss last
};

// Full-batch gradient descent from a seeded Gaussian init, deterministic
// given the seed. Throws DivergenceError with the epoch index if the loss
// leaves the finite range.
FitResult fit_lowrank(const FitTarget& target, const FitConfig& config);

// Fraction of entries where sign(predict) matches the sign target; ties of
// predict == 0 count as wrong for both signs.
double sign_accuracy(const FitModel& model, const SignMatrix& y);

}  // namespace dcx

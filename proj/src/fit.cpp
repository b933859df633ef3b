#include "dcx/fit.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

// log(1 + exp(z)) without overflow on either tail.
double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

// sigma(-z) = 1 / (1 + exp(z)), stable on both tails.
double sigmoid_neg(double z) {
  if (z > 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

// Standard normal from two engine draws (Box-Muller, no second-value cache,
// so the draw count per parameter is fixed and the stream is reproducible).
double gaussian(std::mt19937_64& eng) {
  const double u1 =
      (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(eng() >> 11) * 0x1.0p-53;  // [0, 1)
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

void validate_config(const FitConfig& c) {
  if (c.m < 1) throw ArgumentError("fit: rank m must be >= 1");
  if (c.epochs < 1) throw ArgumentError("fit: epochs must be >= 1");
  if (!(c.learning_rate > 0.0)) {
    throw ArgumentError("fit: learning_rate must be > 0");
  }
  if (c.l2 < 0.0) throw ArgumentError("fit: l2 must be >= 0");
  if (!(c.init_scale > 0.0)) throw ArgumentError("fit: init_scale must be > 0");
}

void validate_pair(const FitModel& model, const FitTarget& target,
                   const FitConfig& config) {
  const std::size_t n = model.E.rows();
  if (model.E.cols() != model.m || model.w.size() != model.m) {
    throw ArgumentError("fit: model rank fields disagree");
  }
  if (target.values().rows() != n || target.values().cols() != n) {
    throw ShapeError("fit: target is " + std::to_string(target.values().rows()) +
                     "x" + std::to_string(target.values().cols()) +
                     ", model expects " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  if (config.loss == Loss::logistic && !target.is_sign()) {
    throw ArgumentError("fit: logistic loss requires a sign target");
  }
}

}  // namespace

FitTarget::FitTarget(const RealMatrix& values)
    : values_(values), is_sign_(false) {
  if (!values_.square()) {
    throw ShapeError("FitTarget: target must be square, got " +
                     std::to_string(values_.rows()) + "x" +
                     std::to_string(values_.cols()));
  }
}

FitTarget::FitTarget(const SignMatrix& pattern)
    : values_(pattern.to_real()), is_sign_(true) {
  if (!values_.square()) {
    throw ShapeError("FitTarget: target must be square, got " +
                     std::to_string(values_.rows()) + "x" +
                     std::to_string(values_.cols()));
  }
}

RealMatrix predict(const FitModel& model) {
  ComplexMatrix f = model.E;  // E diag(w)
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t c = 0; c < f.cols(); ++c) {
      f(i, c) *= model.w[c];
    }
  }
  return real_part(matmul(f, conj_transpose(model.E)));
}

double loss_and_gradient(const FitModel& model, const FitTarget& target,
                         const FitConfig& config, FitGradient& grad) {
  validate_pair(model, target, config);
  const std::size_t n = model.E.rows();
  const std::size_t m = model.m;
  const RealMatrix& y = target.values();
  const RealMatrix p = predict(model);

  // Loss and dL/dP share one pass.
  double loss = 0.0;
  RealMatrix g(n, n);
  if (config.loss == Loss::squared) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d = p(i, j) - y(i, j);
        loss += d * d;
        g(i, j) = 2.0 * d;
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double yp = y(i, j) * p(i, j);
        loss += softplus(-yp);
        g(i, j) = -y(i, j) * sigmoid_neg(yp);
      }
    }
  }
  if (config.l2 > 0.0) {
    double reg = 0.0;
    for (const cplx& e : model.E.entries()) reg += std::norm(e);
    for (const cplx& wc : model.w) reg += std::norm(wc);
    loss += config.l2 * reg;
  }

  // dL/dE = (G E) diag(conj w) + (G^T E) diag(w) + 2 l2 E;
  // dL/dw_c = sum_i conj(E_ic) (G E)_ic + 2 l2 w_c.
  const ComplexMatrix gc = to_complex(g);
  const ComplexMatrix gtc = to_complex(transpose(g));
  const ComplexMatrix ge = matmul(gc, model.E);
  const ComplexMatrix gte = matmul(gtc, model.E);

  grad.E = ComplexMatrix(n, m);
  grad.w.assign(m, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      grad.E(i, c) = std::conj(model.w[c]) * ge(i, c) +
                     model.w[c] * gte(i, c) +
                     2.0 * config.l2 * model.E(i, c);
      grad.w[c] += std::conj(model.E(i, c)) * ge(i, c);
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    grad.w[c] += 2.0 * config.l2 * model.w[c];
  }
  return loss;
}

FitResult fit_lowrank(const FitTarget& target, const FitConfig& config) {
  validate_config(config);
  const std::size_t n = target.values().rows();

  FitResult out;
  out.model.m = config.m;
  out.model.E = ComplexMatrix(n, config.m);
  out.model.w.assign(config.m, cplx(0.0, 0.0));
  std::mt19937_64 eng(config.seed);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < config.m; ++c) {
      const double re = gaussian(eng);
      const double im = gaussian(eng);
      out.model.E(i, c) = config.init_scale * cplx(re, im);
    }
  }
  for (std::size_t c = 0; c < config.m; ++c) {
    const double re = gaussian(eng);
    const double im = gaussian(eng);
    out.model.w[c] = config.init_scale * cplx(re, im);
  }
  validate_pair(out.model, target, config);

  out.loss_trace.reserve(config.epochs + 1);
  FitGradient grad;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    const double loss = loss_and_gradient(out.model, target, config, grad);
    if (!std::isfinite(loss)) {
      throw DivergenceError(
          "fit_lowrank: loss became non-finite at epoch " +
              std::to_string(epoch),
          epoch);
    }
    out.loss_trace.push_back(loss);
    const double lr = config.learning_rate;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < config.m; ++c) {
        out.model.E(i, c) -= lr * grad.E(i, c);
      }
    }
    for (std::size_t c = 0; c < config.m; ++c) {
      out.model.w[c] -= lr * grad.w[c];
    }
  }
  const double final_loss = loss_and_gradient(out.model, target, config, grad);
  if (!std::isfinite(final_loss)) {
    throw DivergenceError(
        "fit_lowrank: loss became non-finite at epoch " +
            std::to_string(config.epochs),
        config.epochs);
  }
  out.loss_trace.push_back(final_loss);
  return out;
}

double sign_accuracy(const FitModel& model, const SignMatrix& y) {
  if (model.E.rows() != y.rows() || y.rows() != y.cols()) {
    throw ShapeError("sign_accuracy: pattern shape does not match model");
  }
  const RealMatrix p = predict(model);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < y.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      const bool pos = p(i, j) > 0.0;
      const bool neg = p(i, j) < 0.0;
      if ((y(i, j) > 0 && pos) || (y(i, j) < 0 && neg)) ++hits;
    }
  }
  return static_cast<double>(hits) /
         static_cast<double>(y.rows() * y.cols());
}

}  // namespace dcx

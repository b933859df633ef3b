#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "dcx/errors.hpp"
#include "dcx/fit.hpp"
#include "doctest.h"
#include "test_support.hpp"

using dcx::cplx;
using dcx::ComplexMatrix;
using dcx::FitConfig;
using dcx::FitGradient;
using dcx::FitModel;
using dcx::FitTarget;
using dcx::RealMatrix;
using dcx::SignMatrix;

namespace {

FitModel random_model(std::mt19937_64& eng, std::size_t n, std::size_t m) {
  FitModel model;
  model.m = m;
  model.E = tsup::random_complex(eng, n, m);
  model.w.resize(m);
  for (cplx& w : model.w) w = cplx(tsup::urand(eng), tsup::urand(eng));
  return model;
}

// Flat view over (re, im) of every E entry then every w entry.
std::size_t coord_count(const FitModel& m) {
  return 2 * m.E.size() + 2 * m.w.size();
}

double get_coord(const FitModel& m, std::size_t idx) {
  if (idx < 2 * m.E.size()) {
    const cplx v = m.E.entries()[idx / 2];
    return idx % 2 == 0 ? v.real() : v.imag();
  }
  idx -= 2 * m.E.size();
  const cplx v = m.w[idx / 2];
  return idx % 2 == 0 ? v.real() : v.imag();
}

void add_coord(FitModel& m, std::size_t idx, double delta) {
  if (idx < 2 * m.E.size()) {
    cplx& v = m.E(idx / 2 / m.E.cols(), idx / 2 % m.E.cols());
    v += idx % 2 == 0 ? cplx(delta, 0.0) : cplx(0.0, delta);
    return;
  }
  idx -= 2 * m.E.size();
  m.w[idx / 2] += idx % 2 == 0 ? cplx(delta, 0.0) : cplx(0.0, delta);
}

double grad_coord(const FitGradient& g, std::size_t idx) {
  if (idx < 2 * g.E.size()) {
    const cplx v = g.E.entries()[idx / 2];
    return idx % 2 == 0 ? v.real() : v.imag();
  }
  idx -= 2 * g.E.size();
  const cplx v = g.w[idx / 2];
  return idx % 2 == 0 ? v.real() : v.imag();
}

SignMatrix mixed_diagonal() {
  return SignMatrix(2, 2, {-1, -1, 1, 1});
}

}  // namespace

TEST_CASE("predict reference cases") {
  FitModel m;
  m.m = 2;
  m.E = ComplexMatrix::identity(2);
  m.w = {cplx(1, 1), cplx(1, 1)};
  CHECK(tsup::max_abs_diff(dcx::predict(m), RealMatrix::identity(2)) == 0.0);

  m.w = {cplx(0, 1), cplx(0, 1)};
  CHECK(tsup::ref_fnorm(dcx::predict(m)) == 0.0);

  FitModel m2;
  m2.m = 1;
  m2.E = ComplexMatrix(2, 1, {cplx(1, 0), cplx(0, 1)});
  m2.w = {cplx(1, 0)};
  CHECK(tsup::max_abs_diff(dcx::predict(m2), RealMatrix::identity(2)) == 0.0);
}

TEST_CASE("loss is zero at a perfect squared fit") {
  std::mt19937_64 eng(71);
  const FitModel m = random_model(eng, 3, 2);
  const FitTarget target(dcx::predict(m));
  FitConfig cfg;
  cfg.m = 2;
  FitGradient g;
  const double loss = dcx::loss_and_gradient(m, target, cfg, g);
  CHECK(loss == 0.0);
  CHECK(tsup::ref_fnorm(g.E) == 0.0);
  for (const cplx& w : g.w) CHECK(std::abs(w) == 0.0);
}

TEST_CASE("logistic loss at zero predictions is n^2 log 2") {
  FitModel m;
  m.m = 2;
  m.E = ComplexMatrix(3, 2);  // zero embeddings force predict == 0
  m.w = {cplx(1, 0), cplx(0, 1)};
  FitConfig cfg;
  cfg.m = 2;
  cfg.loss = dcx::Loss::logistic;
  SignMatrix y(3, 3, {1, -1, 1, -1, 1, -1, 1, -1, 1});
  FitGradient g;
  const double loss = dcx::loss_and_gradient(m, FitTarget(y), cfg, g);
  CHECK(loss == doctest::Approx(9.0 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("analytic gradient matches central finite differences") {
  std::mt19937_64 eng(72);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t m = 1 + trial % 3;
    FitModel model = random_model(eng, n, m);
    FitConfig cfg;
    cfg.m = m;
    cfg.loss = trial % 2 == 0 ? dcx::Loss::squared : dcx::Loss::logistic;
    cfg.l2 = trial % 3 == 0 ? 0.01 : 0.0;

    FitTarget target = [&] {
      if (cfg.loss == dcx::Loss::logistic) {
        std::vector<std::int8_t> v(n * n);
        for (auto& s : v) s = (eng() & 1) ? 1 : -1;
        return FitTarget(SignMatrix(n, n, std::move(v)));
      }
      return FitTarget(tsup::random_real(eng, n, n));
    }();

    FitGradient g;
    (void)dcx::loss_and_gradient(model, target, cfg, g);

    const double h = 1e-6;
    FitGradient scratch;
    for (std::size_t idx = 0; idx < coord_count(model); ++idx) {
      FitModel plus = model;
      add_coord(plus, idx, h);
      FitModel minus = model;
      add_coord(minus, idx, -h);
      const double lp = dcx::loss_and_gradient(plus, target, cfg, scratch);
      const double lm = dcx::loss_and_gradient(minus, target, cfg, scratch);
      const double fd = (lp - lm) / (2.0 * h);
      const double an = grad_coord(g, idx);
      if (std::abs(an) > 1e-8) {
        CHECK(std::abs(fd - an) <= 1e-5 * std::abs(an));
      }
    }
  }
}

TEST_CASE("fit validation errors") {
  const FitTarget tgt(RealMatrix::identity(2));
  FitConfig cfg;
  cfg.m = 0;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);
  cfg.m = 1;
  cfg.epochs = 0;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);
  cfg.epochs = 1;
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);
  cfg.learning_rate = 0.05;
  cfg.l2 = -1.0;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);
  cfg.l2 = 0.0;
  cfg.init_scale = 0.0;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);
  cfg.init_scale = 0.1;
  cfg.loss = dcx::Loss::logistic;
  CHECK_THROWS_AS(dcx::fit_lowrank(tgt, cfg), dcx::ArgumentError);

  CHECK_THROWS_AS(FitTarget(RealMatrix(2, 3)), dcx::ShapeError);
}

TEST_CASE("fit_lowrank reaches a tiny loss on the identity") {
  // Fixture thresholds recorded from observed runs: loss <= 5e-6 at
  // 2000 epochs for these seeds, asserted against the looser 1e-4 gate.
  for (std::uint64_t seed : {1, 2, 4}) {
    FitConfig cfg;
    cfg.m = 4;
    cfg.seed = seed;
    const dcx::FitResult res =
        dcx::fit_lowrank(FitTarget(RealMatrix::identity(4)), cfg);
    CHECK(res.loss_trace.size() == cfg.epochs + 1);
    CHECK(res.loss_trace.back() <= 1e-4);
    for (double l : res.loss_trace) CHECK(std::isfinite(l));
  }
}

TEST_CASE("fit_lowrank is deterministic given the seed") {
  FitConfig cfg;
  cfg.m = 2;
  cfg.seed = 9;
  cfg.epochs = 50;
  const FitTarget tgt(mixed_diagonal());
  cfg.loss = dcx::Loss::logistic;
  const dcx::FitResult a = dcx::fit_lowrank(tgt, cfg);
  const dcx::FitResult b = dcx::fit_lowrank(tgt, cfg);
  CHECK(a.loss_trace == b.loss_trace);
  CHECK(tsup::max_abs_diff(a.model.E, b.model.E) == 0.0);
}

TEST_CASE("rank split on the mixed-diagonal pattern") {
  const FitTarget tgt(mixed_diagonal());
  int rank2_perfect = 0;
  for (std::uint64_t seed : {1, 2, 4}) {
    FitConfig cfg;
    cfg.loss = dcx::Loss::logistic;
    cfg.seed = seed;
    cfg.m = 2;
    const dcx::FitResult r2 = dcx::fit_lowrank(tgt, cfg);
    if (dcx::sign_accuracy(r2.model, mixed_diagonal()) == 1.0) ++rank2_perfect;
    cfg.m = 1;
    const dcx::FitResult r1 = dcx::fit_lowrank(tgt, cfg);
    CHECK(dcx::sign_accuracy(r1.model, mixed_diagonal()) < 1.0);
  }
  CHECK(rank2_perfect >= 2);
}

TEST_CASE("squared loss accepts a sign target") {
  FitConfig cfg;
  cfg.m = 2;
  cfg.epochs = 200;
  const dcx::FitResult res = dcx::fit_lowrank(FitTarget(mixed_diagonal()), cfg);
  CHECK(std::isfinite(res.loss_trace.back()));
}

TEST_CASE("fitted predictions can be asymmetric") {
  // Real symmetric factorizations cannot represent [[0,1],[0,0]]; the
  // complex real-part model can, and the off-diagonal entries split apart.
  const RealMatrix a(2, 2, {0.0, 1.0, 0.0, 0.0});
  FitConfig cfg;
  cfg.m = 2;
  cfg.seed = 1;
  const dcx::FitResult res = dcx::fit_lowrank(FitTarget(a), cfg);
  const RealMatrix p = dcx::predict(res.model);
  CHECK(res.loss_trace.back() <= 1e-3);
  CHECK(std::abs(p(0, 1) - p(1, 0)) > 0.5);
}

TEST_CASE("divergence raises with the epoch index") {
  FitConfig cfg;
  cfg.m = 2;
  cfg.learning_rate = 1e3;
  try {
    (void)dcx::fit_lowrank(FitTarget(RealMatrix::identity(4)), cfg);
    FAIL("expected DivergenceError");
  } catch (const dcx::DivergenceError& e) {
    CHECK(e.epoch() > 0);
    CHECK(e.epoch() <= 2000);
  }
}

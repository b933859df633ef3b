#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "dcx/errors.hpp"
#include "dcx/lift.hpp"
#include "dcx/rank.hpp"
#include "doctest.h"
#include "test_support.hpp"

using dcx::cplx;
using dcx::ComplexMatrix;
using dcx::RealMatrix;

TEST_CASE("lift_real reference cases") {
  const RealMatrix a(2, 2, {0.0, 1.0, 0.0, 0.0});
  const ComplexMatrix x = dcx::lift_real(a);
  CHECK(x(0, 0) == cplx(0, 0));
  CHECK(x(0, 1) == cplx(1, 0));
  CHECK(x(1, 0) == cplx(0, 1));
  CHECK(x(1, 1) == cplx(0, 0));

  const ComplexMatrix xi = dcx::lift_real(RealMatrix::identity(2));
  CHECK(xi(0, 0) == cplx(1, 1));
  CHECK(xi(0, 1) == cplx(0, 0));
  CHECK(xi(1, 1) == cplx(1, 1));

  // Skew-symmetric: X = (1 - i) A.
  const RealMatrix skew(2, 2, {0.0, 1.0, -1.0, 0.0});
  const ComplexMatrix xs = dcx::lift_real(skew);
  CHECK(xs(0, 1) == cplx(1, -1));
  CHECK(xs(1, 0) == cplx(-1, 1));
  CHECK(xs(0, 0) == cplx(0, 0));

  CHECK_THROWS_AS(dcx::lift_real(RealMatrix(2, 3)), dcx::ShapeError);
}

TEST_CASE("lift_imag reference cases") {
  const RealMatrix a(2, 2, {0.0, 1.0, 0.0, 0.0});
  const ComplexMatrix x = dcx::lift_imag(a);
  CHECK(x(0, 0) == cplx(0, 0));
  CHECK(x(0, 1) == cplx(0, 1));
  CHECK(x(1, 0) == cplx(1, 0));
  CHECK(x(1, 1) == cplx(0, 0));

  const ComplexMatrix xi = dcx::lift_imag(RealMatrix::identity(2));
  CHECK(xi(0, 0) == cplx(1, 1));

  CHECK(tsup::ref_fnorm(dcx::lift_imag(RealMatrix(3, 3))) == 0.0);
  CHECK_THROWS_AS(dcx::lift_imag(RealMatrix(3, 2)), dcx::ShapeError);
}

TEST_CASE("lifts are exact entrywise constructions") {
  std::mt19937_64 eng(31);
  for (std::size_t n : {1, 2, 5, 9}) {
    const RealMatrix a = tsup::random_real(eng, n, n);
    const ComplexMatrix x = dcx::lift_real(a);
    CHECK(tsup::max_abs_diff(real_part(x), a) == 0.0);
    CHECK(tsup::max_abs_diff(imag_part(x), transpose(a)) == 0.0);
    const ComplexMatrix xi = dcx::lift_imag(a);
    CHECK(tsup::max_abs_diff(imag_part(xi), a) == 0.0);
    CHECK(tsup::max_abs_diff(real_part(xi), transpose(a)) == 0.0);
  }
}

TEST_CASE("check_quarter_turn") {
  std::mt19937_64 eng(32);
  for (std::size_t n : {1, 3, 6}) {
    const RealMatrix a = tsup::random_real(eng, n, n);
    CHECK(dcx::check_quarter_turn(dcx::lift_real(a), 1e-14));
  }
  CHECK_FALSE(dcx::check_quarter_turn(ComplexMatrix::identity(2), 1e-10));
  const ComplexMatrix diag(
      2, 2, {cplx(1, 1), cplx(0, 0), cplx(0, 0), cplx(1, 1)});
  CHECK(dcx::check_quarter_turn(diag, 1e-14));
  CHECK_THROWS_AS(dcx::check_quarter_turn(ComplexMatrix(1, 2), 1e-10),
                  dcx::ShapeError);
}

TEST_CASE("is_normal") {
  std::mt19937_64 eng(33);
  const RealMatrix a = tsup::random_real(eng, 4, 4);
  CHECK(dcx::is_normal(dcx::lift_real(a), 1e-12));

  const ComplexMatrix jordan(2, 2,
                             {cplx(0, 0), cplx(1, 0), cplx(0, 0), cplx(0, 0)});
  CHECK_FALSE(dcx::is_normal(jordan, 1e-12));

  const ComplexMatrix herm = tsup::random_hermitian(eng, 5);
  CHECK(dcx::is_normal(herm, 1e-12));

  CHECK_THROWS_AS(dcx::is_normal(ComplexMatrix(2, 3), 1e-12),
                  dcx::ShapeError);
}

TEST_CASE("lift rank is at most twice the input rank") {
  std::mt19937_64 eng(34);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 4 + trial;
    const std::size_t k = 1 + trial % 3;
    const RealMatrix a = tsup::random_rank_k(eng, n, k);
    // Gram-based rank squares the spectrum, so exact zeros surface as
    // ~sqrt(eps) singular values; the gate must sit above that floor.
    const std::size_t ra = dcx::numerical_rank(a, 1e-7);
    const std::size_t rx = dcx::numerical_rank(dcx::lift_real(a), 1e-7);
    CHECK(rx <= 2 * ra);
  }
}

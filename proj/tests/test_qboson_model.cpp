#include "doctest.h"

#include "qtau/qboson_model.hpp"
#include "qtau/sampling.hpp"

using namespace qtau;

TEST_CASE("q = 0 reduces every mode to the phase model") {
  RandomRationals rng(51);
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const BoxSpec box(n, m);
      const auto x = rng.distinct(static_cast<std::size_t>(n));
      const auto y = rng.distinct(static_cast<std::size_t>(n));
      const Rational phase = scalar_product(x, y, box, ScalarMode::det);
      for (auto mode : all_qscalar_modes()) CHECK(scalar_product_q(x, y, QBosonSpec{box, 0}, mode) == phase);
    }
  }
}

TEST_CASE("single particle hall-littlewood sum") {
  const Rational x(2, 3), y(-3, 5), q(1, 3);
  const std::vector<Rational> xs{x}, ys{y};
  const Rational expected = 1 + (1 - q) * x * y + (1 - q) * x * x * y * y;
  const QBosonSpec spec{BoxSpec(1, 2), q};
  for (auto mode : {QScalarMode::hl_sum, QScalarMode::big_schur, QScalarMode::twisted_schur}) {
    CHECK(scalar_product_q(xs, ys, spec, mode) == expected);
  }
  // The quotient is a different function that only shares the low-degree part.
  const Rational t = x * y;
  CHECK(scalar_product_q(xs, ys, spec, QScalarMode::det_quotient) == (1 + t + t * t) / (1 + q * t + q * q * t * t));
}

TEST_CASE("reduced determinant") {
  RandomRationals rng(52);
  const auto x = rng.distinct(3);
  const auto y = rng.distinct(3);
  const BoxSpec box(3, 2);
  const QPoly d = reduced_h_determinant(x, y, box);
  CHECK(d(Rational(0)) == vandermonde(x) * vandermonde(y));
  const Rational r = rng.nonzero();
  PointSet ry = y;
  for (auto& v : ry) v *= r;
  CHECK(d(r) * power(r, 3) == determinant(h_matrix(x, ry, box)));
}

TEST_CASE("graded agreement of all modes with the hall-littlewood sum") {
  RandomRationals rng(53);
  for (const Rational q : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    for (int n = 1; n <= 2; ++n) {
      for (int m = 0; m <= 3; ++m) {
        const QBosonSpec spec{BoxSpec(n, m), q};
        const auto x = rng.distinct(static_cast<std::size_t>(n));
        const auto y = rng.distinct(static_cast<std::size_t>(n));
        const QPoly hl = graded_scalar_product_q(x, y, spec, QScalarMode::hl_sum, m);
        CHECK(hl == graded_cauchy_product(x, y, q, m));
        for (auto mode : all_qscalar_modes()) CHECK(graded_scalar_product_q(x, y, spec, mode, m) == hl);
        // The full box sums of the three partition-sum forms are the same graded series at s = 1.
        const QPoly full = graded_scalar_product_q(x, y, spec, QScalarMode::hl_sum, n * m);
        CHECK(full(Rational(1)) == scalar_product_q(x, y, spec, QScalarMode::hl_sum));
      }
    }
  }
}

TEST_CASE("twisted and big schur modes agree exactly") {
  RandomRationals rng(54);
  for (int n = 1; n <= 2; ++n) {
    for (int m = 0; m <= 3; ++m) {
      const QBosonSpec spec{BoxSpec(n, m), rng()};
      const auto x = rng.distinct(static_cast<std::size_t>(n));
      const auto y = rng.distinct(static_cast<std::size_t>(n));
      CHECK(scalar_product_q(x, y, spec, QScalarMode::twisted_schur) ==
            scalar_product_q(x, y, spec, QScalarMode::big_schur));
    }
  }
}

TEST_CASE("q = 1 collapses the hall-littlewood sum") {
  RandomRationals rng(55);
  const auto x = rng.distinct(2);
  const auto y = rng.distinct(2);
  CHECK(scalar_product_q(x, y, QBosonSpec{BoxSpec(2, 3), 1}, QScalarMode::hl_sum) == 1);
}

TEST_CASE("permutation symmetry") {
  RandomRationals rng(56);
  const QBosonSpec spec{BoxSpec(3, 2), Rational(1, 3)};
  auto x = rng.distinct(3);
  auto y = rng.distinct(3);
  for (auto mode : all_qscalar_modes()) {
    const Rational before = scalar_product_q(x, y, spec, mode);
    auto xp = x;
    auto yp = y;
    std::reverse(xp.begin(), xp.end());
    std::rotate(yp.begin(), yp.begin() + 1, yp.end());
    CHECK(scalar_product_q(xp, yp, spec, mode) == before);
  }
}

TEST_CASE("det quotient errors") {
  const std::vector<Rational> rep{Rational(1, 2), Rational(1, 2)};
  const std::vector<Rational> y{Rational(1, 3), Rational(1, 5)};
  CHECK_THROWS_AS(scalar_product_q(rep, y, QBosonSpec{BoxSpec(2, 2), Rational(1, 3)}, QScalarMode::det_quotient),
                  std::domain_error);
  CHECK_THROWS_AS(scalar_product_q(y, y, QBosonSpec{BoxSpec(3, 2), Rational(1, 3)}, QScalarMode::hl_sum),
                  std::invalid_argument);
}

TEST_CASE("c tilde matrix") {
  const QPoly Q = QPoly::monomial(1);
  CHECK(c_tilde_matrix(0) == Matrix<QPoly>::Constant(1, 1, QPoly(1)));
  CHECK(c_tilde_matrix(1) == Matrix<QPoly>::Constant(1, 1, QPoly(1) - Q));
  for (int d = 0; d <= 6; ++d) {
    CHECK(c_tilde_inverse_holds(d));
    const auto c = c_tilde_matrix(d);
    CHECK(c == Matrix<QPoly>(c.transpose()));
  }
}

TEST_CASE("big schur coefficients") {
  RandomRationals rng(57);
  CHECK(big_schur_coeff_check({}, rng.distinct(2), rng()));
  for (int trial = 0; trial < 10; ++trial) {
    const auto y = rng.distinct(3);
    const Rational q = rng();
    CHECK(big_schur_coeff_check(Partition{2, 1}, y, q));
    CHECK(big_schur_coeff_check(Partition{1}, y, q));
  }
  const auto y = rng.distinct(3);
  for (int w = 0; w <= 6; ++w) {
    for (const auto& mu : partitions_of(w)) CHECK(big_schur_coeff_check(mu, y, Rational(2, 5)));
  }
}

TEST_CASE("hall-littlewood cauchy identity through the box window") {
  for (const Rational q : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 0; m <= 6; ++m) {
        const int degree = std::min(m, 6);
        const auto box_sum = hl_cauchy_box_series(BoxSpec(n, m), q, degree);
        const auto product = hl_cauchy_product_series(n, q, degree);
        for (int d = 0; d <= 2 * degree; ++d) {
          CHECK(box_sum.homogeneous_component(d) == product.homogeneous_component(d));
        }
      }
    }
  }
  // Past the window the box sum is missing lambda_1 > M.
  CHECK(hl_cauchy_box_series(BoxSpec(1, 1), Rational(1, 3), 2) != hl_cauchy_product_series(1, Rational(1, 3), 2));
}

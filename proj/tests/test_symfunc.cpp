#include "doctest.h"

#include "oracles.hpp"
#include "qtau/miwa.hpp"
#include "qtau/sampling.hpp"
#include "qtau/symfunc.hpp"

using namespace qtau;

namespace {

const QPoly Q = QPoly::monomial(1);

std::vector<std::string> variable_names(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

// prod_{j,k} (1 - q x_j y_k) / (1 - x_j y_k) through total degree `cutoff`.
TruncatedSeries cauchy_product(int n, const Rational& q, int cutoff) {
  const auto vars = variable_names(n);
  TruncatedSeries out = TruncatedSeries::constant(vars, cutoff, Rational(1));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Exponents e(vars.size(), 0);
      TruncatedSeries factor = TruncatedSeries::constant(vars, cutoff, Rational(1));
      for (int p = 1; 2 * p <= cutoff; ++p) {
        e[static_cast<std::size_t>(j)] = p;
        e[static_cast<std::size_t>(n + k)] = p;
        factor.add_term(e, Rational(1) - q);  // (1 - q w)/(1 - w) = 1 + (1 - q) sum_{p>=1} w^p
      }
      out = out * factor;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basis evaluation") {
  const std::vector<Rational> two_three{Rational(2), Rational(3)};
  CHECK(basis_eval(Basis::power, 1, two_three) == 5);
  CHECK(basis_eval(Basis::elementary, 3, two_three) == 0);
  CHECK(basis_eval(Basis::elementary, 2, two_three) == 6);
  CHECK(basis_eval(Basis::homogeneous, 2, std::vector<Rational>{Rational(1, 2)}) == Rational(1, 4));
  CHECK(basis_eval(Basis::homogeneous, 2, two_three) == 4 + 6 + 9);
  CHECK_THROWS_AS(basis_eval(Basis::power, -1, two_three), std::invalid_argument);
}

TEST_CASE("schur examples") {
  RandomRationals rng(1);
  const auto x = rng.distinct(2);
  CHECK(schur_eval(Partition{}, x) == 1);
  CHECK(schur_eval(Partition{2, 1}, x) == x[0] * x[1] * (x[0] + x[1]));
  CHECK(schur_eval(Partition{1, 1, 1}, x) == 0);
  const std::vector<Rational> repeated{Rational(1, 2), Rational(1, 2)};
  CHECK(schur_eval(Partition{2, 1}, repeated) == Rational(1, 4));
}

TEST_CASE("bialternant and Jacobi-Trudi agree") {
  RandomRationals rng(2);
  int trials = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto x = rng.distinct(n);
    for (int w = 0; w <= 6; ++w) {
      for (const auto& lambda : partitions_of(w)) {
        CHECK(schur_bialternant(lambda, x) == schur_jacobi_trudi(lambda, x));
        ++trials;
      }
    }
  }
  CHECK(trials > 0);
}

TEST_CASE("skew schur against tableau sums") {
  const Rational a(2, 3), b(-1, 5);
  const std::vector<Rational> ab{a, b};
  CHECK(skew_schur_eval(Partition{1}, Partition{1}, ab) == 1);
  CHECK(skew_schur_eval(Partition{1}, Partition{2}, ab) == 0);
  // Jacobi-Trudi gives det[[h1, h3], [0, h1]] = h1^2; the tableau count agrees.
  CHECK(skew_schur_eval(Partition{2, 1}, Partition{1}, ab) == (a + b) * (a + b));
  CHECK(oracle::skew_schur_by_tableaux(Partition{2, 1}, Partition{1}, ab) == (a + b) * (a + b));
  RandomRationals rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = rng.distinct(static_cast<std::size_t>(rng.integer(1, 3)));
    for (const auto& lambda : enumerate_in_box(3, 3)) {
      for (const auto& mu : subpartitions(lambda)) {
        CHECK(skew_schur_eval(lambda, mu, x) == oracle::skew_schur_by_tableaux(lambda, mu, x));
      }
      CHECK(skew_schur_eval(lambda, Partition{}, x) == schur_eval(lambda, x));
    }
  }
}

TEST_CASE("hall-littlewood examples") {
  RandomRationals rng(4);
  const auto x = rng.distinct(2);
  const Rational q = rng();
  CHECK(hall_littlewood_eval(Partition{1}, x, q) == x[0] + x[1]);
  CHECK(hall_littlewood_eval(Partition{1, 1}, x, q) == x[0] * x[1]);
  CHECK(hall_littlewood_symmetrized(Partition{1, 1}, x, q) == x[0] * x[1]);
  CHECK(hall_littlewood_eval(Partition{2}, x, Rational(0)) == x[0] * x[0] + x[0] * x[1] + x[1] * x[1]);
  CHECK(hall_littlewood_eval(Partition{1, 1, 1}, x, q) == 0);
  // P_2 = m_2 + (1 - Q) m_11 and P_21 = m_21 + (2 - Q - Q^2) m_111.
  const auto& p2 = hall_littlewood_monomials(Partition{2});
  CHECK(p2.at(Partition{2}) == QPoly(1));
  CHECK(p2.at(Partition{1, 1}) == QPoly(1) - Q);
  const auto& p21 = hall_littlewood_monomials(Partition{2, 1});
  CHECK(p21.at(Partition{1, 1, 1}) == QPoly(2) - Q - Q * Q);
}

TEST_CASE("hall-littlewood routes agree and reduce to schur") {
  RandomRationals rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 4));
    const auto x = rng.distinct(n);
    const Rational q = rng();
    for (int w = 0; w <= 6; ++w) {
      for (const auto& lambda : partitions_of(w)) {
        CHECK(hall_littlewood_eval(lambda, x, Rational(0)) == schur_eval(lambda, x));
        if (lambda.length() <= static_cast<int>(n) && hall_littlewood_norm(lambda, static_cast<int>(n))(q) != 0) {
          CHECK(hall_littlewood_symmetrized(lambda, x, q) == hall_littlewood_from_monomials(lambda, x, q));
        }
      }
    }
  }
  // Q = 1 gives monomials.
  const auto x = rng.distinct(3);
  for (const auto& lambda : partitions_of(4)) {
    CHECK(hall_littlewood_eval(lambda, x, Rational(1)) == monomial_eval(lambda, x));
  }
  // repeated points take the monomial route
  const std::vector<Rational> rep{Rational(1, 3), Rational(1, 3), Rational(2)};
  CHECK(hall_littlewood_eval(Partition{2, 1}, rep, Rational(1, 2)) ==
        hall_littlewood_from_monomials(Partition{2, 1}, rep, Rational(1, 2)));
}

TEST_CASE("kostka tables") {
  const auto& t2 = kostka_tables(2);
  const int two = t2.index_of(Partition{2});
  const int one_one = t2.index_of(Partition{1, 1});
  CHECK(t2.K(two, one_one) == Q);
  CHECK(t2.K(one_one, two).is_zero());
  CHECK(kostka_tables(0).K.rows() == 1);
  for (int w = 0; w <= 6; ++w) {
    const auto& t = kostka_tables(w);
    const auto n = t.K.rows();
    CHECK(multiply(t.K, t.K_inv) == Matrix<QPoly>::Identity(n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
      CHECK(t.K(i, i) == QPoly(1));
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& lambda = t.order[static_cast<std::size_t>(i)];
        const auto& mu = t.order[static_cast<std::size_t>(j)];
        if (!dominates(lambda, mu)) CHECK(t.K(i, j).is_zero());
        if (w <= 5) CHECK(t.K(i, j)(Rational(1)) == Rational(oracle::kostka_number(lambda, mu)));
      }
    }
  }
}

TEST_CASE("kostka tables reproduce schur from hall-littlewood") {
  RandomRationals rng(6);
  for (int trial = 0; trial < 3; ++trial) {
    const auto x = rng.distinct(3);
    const Rational q = rng();
    for (int w = 0; w <= 5; ++w) {
      const auto& t = kostka_tables(w);
      for (std::size_t i = 0; i < t.order.size(); ++i) {
        Rational acc(0);
        Rational acc_inv(0);
        for (std::size_t j = 0; j < t.order.size(); ++j) {
          const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
          acc += t.K(ii, jj)(q) * hall_littlewood_eval(t.order[j], x, q);
          acc_inv += t.K_inv(ii, jj)(q) * schur_eval(t.order[j], x);
        }
        CHECK(acc == schur_eval(t.order[i], x));
        CHECK(acc_inv == hall_littlewood_eval(t.order[i], x, q));
      }
    }
  }
}

TEST_CASE("schur cauchy identity as series") {
  for (int n = 1; n <= 3; ++n) {
    const int cutoff = n == 3 ? 6 : 6;
    const auto vars = variable_names(n);
    TruncatedSeries sum(vars, cutoff);
    for (int w = 0; 2 * w <= cutoff; ++w) {
      for (const auto& lambda : partitions_of(w)) {
        sum += schur_series(lambda, vars, 0, static_cast<std::size_t>(n), cutoff) *
               schur_series(lambda, vars, static_cast<std::size_t>(n), static_cast<std::size_t>(n), cutoff);
      }
    }
    CHECK(sum == cauchy_product(n, Rational(0), cutoff));
  }
}

TEST_CASE("hall-littlewood cauchy identity as series") {
  for (const Rational q : {Rational(1, 4), Rational(1, 3), Rational(2, 5)}) {
    for (int n = 1; n <= 3; ++n) {
      const int cutoff = 6;
      const auto vars = variable_names(n);
      TruncatedSeries sum(vars, cutoff);
      for (int w = 0; 2 * w <= cutoff; ++w) {
        for (const auto& lambda : partitions_of(w)) {
          if (lambda.length() > n) continue;
          sum += hall_littlewood_series(lambda, q, vars, 0, static_cast<std::size_t>(n), cutoff) *
                 hall_littlewood_series(lambda, q, vars, static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                                        cutoff) *
                 b_lambda(lambda)(q);
        }
      }
      CHECK(sum == cauchy_product(n, q, cutoff));
    }
  }
}

TEST_CASE("q coefficients and big schur") {
  RandomRationals rng(7);
  const Rational a = rng.nonzero(), b = rng.nonzero(), q = rng();
  const std::vector<Rational> single{a};
  const std::vector<Rational> ab{a, b};
  CHECK(q_coeff(0, ab, q) == 1);
  CHECK(q_coeff(1, single, q) == (1 - q) * a);
  for (int m = 0; m <= 5; ++m) CHECK(q_coeff(m, ab, Rational(0)) == complete_homogeneous(m, ab));
  CHECK(big_schur_eval(Partition{}, ab, q) == 1);
  CHECK(big_schur_eval(Partition{1}, ab, q) == (1 - q) * (a + b));
  CHECK(big_schur_eval(Partition{2}, single, Rational(0)) == a * a);
  for (const auto& lambda : enumerate_in_box(3, 3)) {
    CHECK(big_schur_eval(lambda, ab, Rational(0)) == schur_eval(lambda, ab));
  }
}

TEST_CASE("supersymmetric schur") {
  RandomRationals rng(8);
  const auto alpha = rng.distinct(2);
  const auto beta = rng.distinct(2);
  CHECK(supersymmetric_schur_eval(Partition{1}, alpha, beta) == alpha[0] + alpha[1] + beta[0] + beta[1]);
  for (int w = 0; w <= 5; ++w) {
    for (const auto& lambda : partitions_of(w)) {
      CHECK(supersymmetric_schur_eval(lambda, alpha, {}) == schur_eval(lambda, alpha));
      // s_lambda(alpha/beta) = sum_mu s_{(lambda/mu)'}(beta) s_mu(alpha)
      Rational expansion(0);
      const Partition lc = conjugate(lambda);
      for (const auto& mu : subpartitions(lambda)) {
        expansion += skew_schur_eval(lc, conjugate(mu), beta) * schur_eval(mu, alpha);
      }
      CHECK(supersymmetric_schur_eval(lambda, alpha, beta) == expansion);
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    const auto y = rng.distinct(static_cast<std::size_t>(rng.integer(1, 3)));
    const Rational q = rng();
    std::vector<Rational> beta_q = y;
    for (auto& v : beta_q) v = -q * v;
    for (int w = 0; w <= 4; ++w) {
      for (const auto& lambda : partitions_of(w)) {
        CHECK(supersymmetric_schur_eval(lambda, y, beta_q) == big_schur_eval(lambda, y, q));
      }
    }
  }
}

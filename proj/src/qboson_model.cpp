#include "qtau/qboson_model.hpp"

#include <stdexcept>

namespace qtau {

const std::vector<QScalarMode>& all_qscalar_modes() {
  static const std::vector<QScalarMode> modes{QScalarMode::hl_sum, QScalarMode::det_quotient, QScalarMode::big_schur,
                                              QScalarMode::twisted_schur};
  return modes;
}

std::string to_string(QScalarMode mode) {
  switch (mode) {
    case QScalarMode::hl_sum:
      return "hl_sum";
    case QScalarMode::det_quotient:
      return "det_quotient";
    case QScalarMode::big_schur:
      return "big_schur";
    case QScalarMode::twisted_schur:
      return "twisted_schur";
  }
  throw std::invalid_argument("unknown mode");
}

namespace {

void require_points(Points x, Points y, const BoxSpec& box) {
  if (static_cast<int>(x.size()) != box.N || static_cast<int>(y.size()) != box.N) {
    throw std::invalid_argument("x and y must each have N points");
  }
}

MiwaCoords twisted_coordinates(Points y, const Rational& q, int weight) {
  return twist(from_points(y, std::max(weight, 1)), q);
}

// Value of the mode's summand for one partition, without the power of s.
Rational summand(const Partition& lambda, Points x, Points y, const Rational& q, QScalarMode mode) {
  switch (mode) {
    case QScalarMode::hl_sum: {
      const Rational px = hall_littlewood_eval(lambda, x, q);
      if (px == 0) return px;
      return b_lambda(lambda)(q) * px * hall_littlewood_eval(lambda, y, q);
    }
    case QScalarMode::big_schur:
      return big_schur_eval(lambda, y, q) * schur_eval(lambda, x);
    case QScalarMode::twisted_schur:
      return schur_in_miwa(lambda, twisted_coordinates(y, q, lambda.weight())) * schur_eval(lambda, x);
    case QScalarMode::det_quotient:
      break;
  }
  throw std::logic_error("mode has no partition summand");
}

}  // namespace

QPoly reduced_h_determinant(Points x, Points y, const BoxSpec& box) {
  const auto n = static_cast<Eigen::Index>(x.size());
  if (static_cast<Eigen::Index>(y.size()) != n) throw std::invalid_argument("x and y must have equal size");
  Matrix<QPoly> h(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      std::vector<Rational> c(static_cast<std::size_t>(box.M + box.N));
      const Rational xy = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      Rational term(1);
      for (auto& ck : c) {
        ck = term;
        term *= xy;
      }
      h(i, j) = QPoly(std::move(c));
    }
  }
  const QPoly det = bareiss_determinant(h);
  return det / QPoly::monomial(static_cast<int>(n * (n - 1) / 2));
}

Rational scalar_product_q(Points x, Points y, const QBosonSpec& spec, QScalarMode mode) {
  require_points(x, y, spec.box);
  if (mode == QScalarMode::det_quotient) {
    if (!pairwise_distinct(x) || !pairwise_distinct(y)) throw std::domain_error("det_quotient needs distinct points");
    const QPoly d = reduced_h_determinant(x, y, spec.box);
    const Rational denominator = d(spec.q);
    if (denominator == 0) throw std::domain_error("det H(x, Q y) vanishes");
    return d(Rational(1)) / denominator;
  }
  Rational acc(0);
  for (const auto& lambda : enumerate_in_box(spec.box.N, spec.box.M)) acc += summand(lambda, x, y, spec.q, mode);
  return acc;
}

QPoly graded_scalar_product_q(Points x, Points y, const QBosonSpec& spec, QScalarMode mode, int degree) {
  require_points(x, y, spec.box);
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (mode == QScalarMode::det_quotient) {
    // Under x -> s x the quotient is d(s) / d(Q s), with d the reduced determinant.
    if (!pairwise_distinct(x) || !pairwise_distinct(y)) throw std::domain_error("det_quotient needs distinct points");
    const QPoly d = reduced_h_determinant(x, y, spec.box);
    return series_divide(d, d.rescaled(spec.q), degree);
  }
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  for (const auto& lambda : enumerate_in_box(spec.box.N, spec.box.M)) {
    const int w = lambda.weight();
    if (w > degree) continue;
    c[static_cast<std::size_t>(w)] += summand(lambda, x, y, spec.q, mode);
  }
  return QPoly(std::move(c));
}

QPoly graded_cauchy_product(Points x, Points y, const Rational& q, int degree) {
  QPoly acc(1);
  for (const auto& xj : x) {
    for (const auto& yk : y) {
      const Rational w = xj * yk;
      // (1 - q w s) / (1 - w s) = 1 + (1 - q) sum_{p >= 1} (w s)^p
      std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
      c[0] = 1;
      Rational term(1);
      for (int p = 1; p <= degree; ++p) {
        term *= w;
        c[static_cast<std::size_t>(p)] = (1 - q) * term;
      }
      acc = (acc * QPoly(std::move(c))).truncated(degree);
    }
  }
  return acc;
}

Matrix<QPoly> c_tilde_matrix(int d) {
  const auto& t = kostka_tables(d);
  const auto n = static_cast<Eigen::Index>(t.order.size());
  Matrix<QPoly> scaled = t.K_inv;
  for (Eigen::Index i = 0; i < n; ++i) {
    const QPoly b = b_lambda(t.order[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) scaled(i, j) *= b;
  }
  return multiply(Matrix<QPoly>(t.K_inv.transpose()), scaled);
}

bool c_tilde_inverse_holds(int d) {
  const auto& t = kostka_tables(d);
  const auto n = static_cast<Eigen::Index>(t.order.size());
  Matrix<QPoly> left = multiply(c_tilde_matrix(d), t.K);
  for (Eigen::Index j = 0; j < n; ++j) {
    const QPoly b = b_lambda(t.order[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < n; ++i) {
      try {
        left(i, j) /= b;
      } catch (const std::domain_error&) {
        return false;
      }
    }
  }
  const Matrix<QPoly> product = multiply(left, Matrix<QPoly>(t.K.transpose()));
  return product == Matrix<QPoly>::Identity(n, n);
}

bool big_schur_coeff_check(const Partition& mu, Points y, const Rational& q) {
  const int d = mu.weight();
  const auto& t = kostka_tables(d);
  const Matrix<QPoly> c = c_tilde_matrix(d);
  const Eigen::Index row = t.index_of(mu);
  Rational acc(0);
  for (std::size_t j = 0; j < t.order.size(); ++j) {
    const Rational coeff = c(row, static_cast<Eigen::Index>(j))(q);
    if (coeff != 0) acc += coeff * schur_eval(t.order[j], y);
  }
  return acc == big_schur_eval(mu, y, q);
}

}  // namespace qtau

namespace qtau {

std::vector<std::string> cauchy_variables(int N) {
  std::vector<std::string> vars;
  for (int j = 1; j <= N; ++j) vars.push_back("x" + std::to_string(j));
  for (int j = 1; j <= N; ++j) vars.push_back("y" + std::to_string(j));
  return vars;
}

TruncatedSeries hl_cauchy_box_series(const BoxSpec& box, const Rational& q, int degree) {
  const auto vars = cauchy_variables(box.N);
  const int cutoff = 2 * degree;
  const auto n = static_cast<std::size_t>(box.N);
  TruncatedSeries sum(vars, cutoff);
  for (const auto& lambda : enumerate_in_box(box.N, box.M)) {
    if (lambda.weight() > degree) continue;
    sum += hall_littlewood_series(lambda, q, vars, 0, n, cutoff) * hall_littlewood_series(lambda, q, vars, n, n, cutoff) *
           b_lambda(lambda)(q);
  }
  return sum;
}

TruncatedSeries hl_cauchy_product_series(int N, const Rational& q, int degree) {
  const auto vars = cauchy_variables(N);
  const int cutoff = 2 * degree;
  TruncatedSeries out = TruncatedSeries::constant(vars, cutoff, Rational(1));
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      // (1 - Q w) / (1 - w) = 1 + (1 - Q) sum_{p >= 1} w^p
      TruncatedSeries factor = TruncatedSeries::constant(vars, cutoff, Rational(1));
      Exponents e(vars.size(), 0);
      for (int p = 1; p <= degree; ++p) {
        e[static_cast<std::size_t>(j)] = p;
        e[static_cast<std::size_t>(N + k)] = p;
        factor.add_term(e, Rational(1) - q);
      }
      out = out * factor;
    }
  }
  return out;
}

}  // namespace qtau

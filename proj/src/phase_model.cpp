#include "qtau/phase_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtau {

BoxSpec::BoxSpec(int n, int m) : N(n), M(m) {
  if (n < 0 || m < 0) throw std::invalid_argument("box dimensions must be nonnegative");
}

Rational h_entry(const Rational& z, const Rational& w, const BoxSpec& box) {
  const Rational zw = z * w;
  Rational acc(0);
  Rational term(1);
  for (int k = 1; k <= box.M + box.N; ++k) {
    acc += term;
    term *= zw;
  }
  return acc;
}

Matrix<Rational> h_matrix(Points x, Points y, const BoxSpec& box) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Matrix<Rational> h(n, static_cast<Eigen::Index>(y.size()));
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) h(i, j) = h_entry(x[static_cast<std::size_t>(i)], y[static_cast<std::size_t>(j)], box);
  }
  return h;
}

namespace {

void require_size(Points p, int n, const char* what) {
  if (static_cast<int>(p.size()) != n) {
    throw std::invalid_argument(std::string(what) + " must have exactly " + std::to_string(n) + " points");
  }
}

void require_distinct(Points p, const char* what) {
  if (!pairwise_distinct(p)) throw std::domain_error(std::string(what) + " has repeated points");
}

PointSet squares(Points u) {
  PointSet out(u.begin(), u.end());
  for (auto& v : out) v *= v;
  return out;
}

}  // namespace

Rational scalar_product(Points x, Points y, const BoxSpec& box, ScalarMode mode) {
  require_size(x, box.N, "x");
  require_size(y, box.N, "y");
  if (mode == ScalarMode::det) {
    require_distinct(x, "x");
    require_distinct(y, "y");
    return determinant(h_matrix(x, y, box)) / (vandermonde(x) * vandermonde(y));
  }
  Rational acc(0);
  for (const auto& lambda : enumerate_in_box(box.N, box.M)) acc += schur_eval(lambda, x) * schur_eval(lambda, y);
  return acc;
}

Rational correlation_Am_skew(Points u, Points v, int m, const BoxSpec& box, const BoxSpec& skew_box) {
  const int n = box.N;
  if (n < 1) throw std::invalid_argument("correlation needs at least one particle");
  require_size(u, n, "x");
  if (static_cast<int>(v.size()) < n - 1) throw std::invalid_argument("y needs at least N-1 points");
  if (m < 0 || m > box.M) throw std::invalid_argument("insertion site out of range");
  const PointSet x = squares(u);
  const PointSet y = squares(v.subspan(0, static_cast<std::size_t>(n - 1)));
  const Partition row = m == 0 ? Partition{} : Partition{m};
  Rational acc(0);
  for (const auto& mu : enumerate_in_box(skew_box.N, skew_box.M)) {
    if (!contains(mu, row)) continue;
    const Rational s = skew_schur_eval(mu, row, y);
    if (s != 0) acc += s * schur_eval(mu, x);
  }
  return acc;
}

Rational correlation_Am(Points u, Points v, int m, const BoxSpec& box, CorrelationMode mode) {
  if (mode == CorrelationMode::skew_sum) return correlation_Am_skew(u, v, m, box, box);
  const int n = box.N;
  const int M = box.M;
  if (n < 1) throw std::invalid_argument("correlation needs at least one particle");
  require_size(u, n, "x");
  require_size(v, n, "y");
  if (m < 0 || m > M) throw std::invalid_argument("insertion site out of range");
  if ((M + n - 1) % 2 != 0) throw std::invalid_argument("M + N - 1 must be even");
  const PointSet x = squares(u);
  const PointSet y = squares(v);
  require_distinct(x, "x");
  require_distinct(y, "y");
  for (const auto& p : u) {
    if (p == 0) throw std::domain_error("x must be nonzero");
  }
  for (const auto& p : v) {
    if (p == 0) throw std::domain_error("y must be nonzero");
  }
  const int last_power = (M + n - 1 - 2 * m) / 2;
  Matrix<Rational> q = h_matrix(x, y, box);
  for (int j = 0; j < n; ++j) q(j, n - 1) = power(x[static_cast<std::size_t>(j)], last_power);

  const auto last = static_cast<std::size_t>(n - 1);
  Rational prefactor = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
  prefactor /= power(v[last], n - 1);
  for (const auto& uj : u) prefactor *= power(uj, M);
  for (std::size_t k = 0; k < last; ++k) {
    prefactor *= power(v[k], M);
    prefactor *= (y[last] - y[k]) / y[k];
  }
  // I / det H = 1 / (Vandermonde(x) Vandermonde(y)).
  return prefactor * determinant(q) / (vandermonde(x) * vandermonde(y));
}

Rational correlation_skew(const Partition& lambda1, const Partition& lambda2, Points x, Points y,
                          const BoxSpec& box) {
  const int rows = static_cast<int>(std::min(x.size(), y.size()));
  Rational acc(0);
  for (const auto& mu : enumerate_in_box(rows, box.M)) {
    if (!contains(mu, lambda1) || !contains(mu, lambda2)) continue;
    const Rational a = skew_schur_eval(mu, lambda1, x);
    if (a == 0) continue;
    acc += a * skew_schur_eval(mu, lambda2, y);
  }
  return acc;
}

FactorizationReport correlation_factorization(const Partition& lambda1, const Partition& lambda2, Points x, Points y,
                                              const BoxSpec& box) {
  FactorizationReport r;
  r.correlation = correlation_skew(lambda1, lambda2, x, y, box);
  const int rows = static_cast<int>(std::min(x.size(), y.size()));
  Rational norm(0);
  for (const auto& mu : enumerate_in_box(rows, box.M)) norm += schur_eval(mu, x) * schur_eval(mu, y);
  Rational tail(0);
  for (const auto& nu : subpartitions(lambda1)) {
    if (!contains(lambda2, nu)) continue;
    tail += skew_schur_eval(lambda1, nu, x) * skew_schur_eval(lambda2, nu, y);
  }
  r.factorized = norm * tail;
  r.equal = r.correlation == r.factorized;
  return r;
}

Rational yankee_correlation(const Partition& nu, Points x, const BoxSpec& box) {
  if (!nu.fits_in_box(box.N, box.M)) throw std::invalid_argument("nu must lie in the box");
  Rational acc(0);
  for (const auto& lambda : enumerate_in_box(box.N, box.M)) {
    if (contains(lambda, nu)) acc += skew_schur_eval(lambda, nu, x);
  }
  return acc;
}

Rational hypergeometric_tau(Points x, Points y, const BoxSpec& box, Points weights) {
  require_size(x, box.N, "x");
  require_size(y, box.N, "y");
  if (static_cast<int>(weights.size()) != box.M + 1) throw std::invalid_argument("need one weight per site");
  Rational acc(0);
  for (const auto& mu : enumerate_in_box(box.N, box.M)) {
    const auto occupation = occupation_from_partition(mu, box.N, box.M);
    Rational c(1);
    for (std::size_t i = 0; i < occupation.counts.size(); ++i) {
      if (occupation.counts[i] != 0) c *= power(weights[i], occupation.counts[i]);
    }
    if (c != 0) acc += c * schur_eval(mu, x) * schur_eval(mu, y);
  }
  return acc;
}

Rational miwa_schur_pairing(int n, const MiwaCoords& t, const MiwaCoords& tprime, int cutoff) {
  Rational acc(0);
  for (int w = 0; w <= cutoff; ++w) {
    for (const auto& lambda : partitions_of(w)) {
      if (lambda.length() > n) continue;
      acc += schur_in_miwa(lambda, t) * schur_in_miwa(lambda, tprime);
    }
  }
  return acc;
}

Rational matrix_integral_constant_term(int n, const MiwaCoords& t, const MiwaCoords& tprime, int cutoff,
                                       SignConvention sign) {
  if (n != 1 && n != 2) throw std::invalid_argument("matrix integral supports n = 1 or n = 2");
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  // exp(xi(t, z)) = sum_a h_a(t) z^a, exp(+-xi(t', 1/z)) = sum_b h_b(+-t') z^{-b}.
  const auto h = complete_homogeneous_in_miwa(t, cutoff);
  std::vector<Rational> tp = tprime.values();
  if (sign == SignConvention::minus) {
    for (auto& v : tp) v = -v;
  }
  const auto hp = complete_homogeneous_in_miwa(MiwaCoords(tp), cutoff + n);
  if (n == 1) {
    Rational acc(0);
    for (int a = 0; a <= cutoff; ++a) acc += h[static_cast<std::size_t>(a)] * hp[static_cast<std::size_t>(a)];
    return acc;
  }
  // Vandermonde(z) Vandermonde(1/z) = 2 - z1/z2 - z2/z1 for two variables.
  struct Term {
    int c, d1, d2;
  };
  const Term terms[] = {{2, 0, 0}, {-1, 1, -1}, {-1, -1, 1}};
  Rational acc(0);
  for (int a1 = 0; a1 <= cutoff; ++a1) {
    for (int a2 = 0; a1 + a2 <= cutoff; ++a2) {
      for (const auto& term : terms) {
        // z_l^{a_l + d_l - b_l} must be constant.
        const int b1 = a1 + term.d1;
        const int b2 = a2 + term.d2;
        if (b1 < 0 || b2 < 0) continue;
        acc += Rational(term.c) * h[static_cast<std::size_t>(a1)] * h[static_cast<std::size_t>(a2)] *
               hp[static_cast<std::size_t>(b1)] * hp[static_cast<std::size_t>(b2)];
      }
    }
  }
  return acc / 2;
}

bool giambelli_check(Points y, const Partition& lambda) {
  const auto f = frobenius(lambda);
  const int d = f.rank();
  auto hook = [](int a, int b) {
    std::vector<int> parts{a + 1};
    parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
    return Partition(std::move(parts));
  };
  const int kmax = lambda.part(1) + lambda.length() + 1;
  const auto h = complete_homogeneous_sequence(kmax, y);
  auto c = [&](const Partition& p) { return jacobi_trudi(p, Partition{}, h); };
  Matrix<Rational> g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      g(i, j) = c(hook(f.pairs[static_cast<std::size_t>(i)].first, f.pairs[static_cast<std::size_t>(j)].second));
    }
  }
  return determinant(g) == c(lambda);
}

bool vandermonde_scaling_holds(Points y, const Rational& q) {
  PointSet scaled(y.begin(), y.end());
  for (auto& v : scaled) v *= q;
  const int n = static_cast<int>(y.size());
  return vandermonde(scaled) == power(q, n * (n - 1) / 2) * vandermonde(y);
}

}  // namespace qtau

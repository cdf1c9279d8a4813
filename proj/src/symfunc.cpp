#include "qtau/symfunc.hpp"

#include "qtau/miwa.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qtau {

namespace {

void require_nonnegative(int k) {
  if (k < 0) throw std::invalid_argument("symmetric function degree must be nonnegative");
}

std::vector<int> padded(const Partition& lambda, std::size_t n) {
  std::vector<int> out = lambda.parts();
  out.resize(n, 0);
  return out;
}

}  // namespace

Rational power_sum(int k, Points x) {
  require_nonnegative(k);
  Rational acc(0);
  for (const auto& xi : x) acc += power(xi, k);
  return acc;
}

Rational elementary(int k, Points x) {
  require_nonnegative(k);
  if (k > static_cast<int>(x.size())) return Rational(0);
  std::vector<Rational> e(static_cast<std::size_t>(k) + 1);
  e[0] = 1;
  for (const auto& xi : x) {
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] += xi * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

std::vector<Rational> complete_homogeneous_sequence(int kmax, Points x) {
  require_nonnegative(kmax);
  std::vector<Rational> h(static_cast<std::size_t>(kmax) + 1);
  h[0] = 1;
  for (const auto& xi : x) {
    for (int j = 1; j <= kmax; ++j) h[static_cast<std::size_t>(j)] += xi * h[static_cast<std::size_t>(j - 1)];
  }
  return h;
}

Rational complete_homogeneous(int k, Points x) {
  require_nonnegative(k);
  return complete_homogeneous_sequence(k, x)[static_cast<std::size_t>(k)];
}

Rational basis_eval(Basis kind, int k, Points x) {
  switch (kind) {
    case Basis::power:
      return power_sum(k, x);
    case Basis::elementary:
      return elementary(k, x);
    case Basis::homogeneous:
      return complete_homogeneous(k, x);
  }
  throw std::invalid_argument("unknown basis");
}

Rational jacobi_trudi(const Partition& lambda, const Partition& mu, std::span<const Rational> h) {
  if (!contains(lambda, mu)) return Rational(0);
  const int n = lambda.length();
  Matrix<Rational> m(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int k = lambda.part(i) - mu.part(j) - i + j;
      if (k < 0) {
        m(i - 1, j - 1) = 0;
      } else if (k >= static_cast<int>(h.size())) {
        throw std::out_of_range("Jacobi-Trudi needs more terms of the generating sequence");
      } else {
        m(i - 1, j - 1) = h[static_cast<std::size_t>(k)];
      }
    }
  }
  return determinant(m);
}

Rational schur_jacobi_trudi(const Partition& lambda, Points x) {
  if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
  const auto h = complete_homogeneous_sequence(lambda.part(1) + lambda.length(), x);
  return jacobi_trudi(lambda, Partition{}, h);
}

Rational schur_bialternant(const Partition& lambda, Points x) {
  if (!pairwise_distinct(x)) throw std::domain_error("bialternant needs pairwise-distinct points");
  const auto n = x.size();
  if (lambda.length() > static_cast<int>(n)) return Rational(0);
  const auto parts = padded(lambda, n);
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = power(x[i], parts[j] + static_cast<int>(n - 1 - j));
  }
  return determinant(m) / vandermonde(x);
}

Rational schur_eval(const Partition& lambda, Points x) {
  if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
  return pairwise_distinct(x) ? schur_bialternant(lambda, x) : schur_jacobi_trudi(lambda, x);
}

Rational skew_schur_eval(const Partition& lambda, const Partition& mu, Points x) {
  if (!contains(lambda, mu)) return Rational(0);
  const auto h = complete_homogeneous_sequence(lambda.part(1) + lambda.length(), x);
  return jacobi_trudi(lambda, mu, h);
}

Rational monomial_eval(const Partition& mu, Points x) {
  if (mu.length() > static_cast<int>(x.size())) return Rational(0);
  std::vector<int> exps = padded(mu, x.size());
  std::sort(exps.begin(), exps.end());
  Rational acc(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (exps[i] != 0) term *= power(x[i], exps[i]);
    }
    acc += term;
  } while (std::next_permutation(exps.begin(), exps.end()));
  return acc;
}

namespace {

// Product over columns j in J of (1 - Q^{m_j(nu)}), where J holds the j >= 1
// with no strip box in column j but one in column j + 1.
QPoly strip_weight(const Partition& lambda, const Partition& nu) {
  const Partition lc = conjugate(lambda);
  const Partition nc = conjugate(nu);
  QPoly out(1);
  for (int j = 1; j < lambda.part(1); ++j) {
    const int here = lc.part(j) - nc.part(j);
    const int next = lc.part(j + 1) - nc.part(j + 1);
    if (here == 0 && next == 1) out *= QPoly(1) - QPoly::monomial(nu.multiplicity(j));
  }
  return out;
}

// Sum over chains of horizontal strips with sizes content[0..k) building lambda.
class StripRecursion {
 public:
  StripRecursion(const Partition& content, bool hall_littlewood)
      : content_(content.parts()), hall_littlewood_(hall_littlewood) {}

  QPoly operator()(const Partition& lambda, int k) {
    if (k == 0) return lambda.empty() ? QPoly(1) : QPoly();
    const auto key = std::make_pair(lambda, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    QPoly acc;
    for (const auto& nu : remove_horizontal_strips(lambda, content_[static_cast<std::size_t>(k - 1)])) {
      QPoly sub = (*this)(nu, k - 1);
      if (sub.is_zero()) continue;
      acc += hall_littlewood_ ? sub * strip_weight(lambda, nu) : sub;
    }
    memo_.emplace(key, acc);
    return acc;
  }

 private:
  std::vector<int> content_;
  bool hall_littlewood_;
  std::map<std::pair<Partition, int>, QPoly> memo_;
};

MonomialExpansion expand_in_monomials(const Partition& lambda, bool hall_littlewood) {
  MonomialExpansion out;
  for (const auto& mu : partitions_of(lambda.weight())) {
    if (!dominates(lambda, mu)) continue;
    StripRecursion rec(mu, hall_littlewood);
    QPoly c = rec(lambda, mu.length());
    if (!c.is_zero()) out.emplace(mu, std::move(c));
  }
  return out;
}

struct ExpansionCache {
  std::mutex mutex;
  std::map<Partition, MonomialExpansion> hall_littlewood;
  std::map<Partition, MonomialExpansion> schur;
  std::map<int, KostkaTables> kostka;
};

ExpansionCache& cache() {
  static ExpansionCache instance;
  return instance;
}

}  // namespace

const MonomialExpansion& hall_littlewood_monomials(const Partition& lambda) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.hall_littlewood.find(lambda); it != c.hall_littlewood.end()) return it->second;
  }
  MonomialExpansion e = expand_in_monomials(lambda, true);
  std::lock_guard lock(c.mutex);
  return c.hall_littlewood.try_emplace(lambda, std::move(e)).first->second;
}

const MonomialExpansion& schur_monomials(const Partition& lambda) {
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.schur.find(lambda); it != c.schur.end()) return it->second;
  }
  MonomialExpansion e = expand_in_monomials(lambda, false);
  std::lock_guard lock(c.mutex);
  return c.schur.try_emplace(lambda, std::move(e)).first->second;
}

QPoly hall_littlewood_norm(const Partition& lambda, int n) {
  if (lambda.length() > n) throw std::invalid_argument("partition longer than the number of variables");
  QPoly v(1);
  auto multiplicity_norm = [](int m) {
    QPoly out(1);
    for (int j = 1; j <= m; ++j) out *= q_integer(j);
    return out;
  };
  v *= multiplicity_norm(n - lambda.length());
  for (int size = 1; size <= lambda.part(1); ++size) v *= multiplicity_norm(lambda.multiplicity(size));
  return v;
}

Rational hall_littlewood_symmetrized(const Partition& lambda, Points x, const Rational& q) {
  const auto n = x.size();
  if (lambda.length() > static_cast<int>(n)) return Rational(0);
  if (!pairwise_distinct(x)) throw std::domain_error("symmetrization needs pairwise-distinct points");
  const Rational norm = hall_littlewood_norm(lambda, static_cast<int>(n))(q);
  if (norm == 0) throw std::domain_error("Hall-Littlewood normalization vanishes at this q");
  const auto parts = padded(lambda, n);
  Matrix<Rational> ratio(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) ratio(a, b) = (x[a] - q * x[b]) / (x[a] - x[b]);
    }
  }
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), std::size_t{0});
  Rational acc(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (parts[i] != 0) term *= power(x[w[i]], parts[i]);
    }
    for (std::size_t i = 0; i < n && term != 0; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) term *= ratio(w[i], w[j]);
    }
    acc += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return acc / norm;
}

Rational hall_littlewood_from_monomials(const Partition& lambda, Points x, const Rational& q) {
  if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
  Rational acc(0);
  for (const auto& [mu, coeff] : hall_littlewood_monomials(lambda)) {
    if (mu.length() > static_cast<int>(x.size())) continue;
    const Rational c = coeff(q);
    if (c != 0) acc += c * monomial_eval(mu, x);
  }
  return acc;
}

Rational hall_littlewood_eval(const Partition& lambda, Points x, const Rational& q) {
  if (lambda.length() > static_cast<int>(x.size())) return Rational(0);
  if (pairwise_distinct(x) && hall_littlewood_norm(lambda, static_cast<int>(x.size()))(q) != 0) {
    return hall_littlewood_symmetrized(lambda, x, q);
  }
  return hall_littlewood_from_monomials(lambda, x, q);
}

int KostkaTables::index_of(const Partition& p) const {
  const auto it = std::find(order.begin(), order.end(), p);
  return it == order.end() ? -1 : static_cast<int>(it - order.begin());
}

namespace {

KostkaTables build_kostka(int weight) {
  KostkaTables t;
  t.weight = weight;
  t.order = partitions_of(weight);
  const auto n = static_cast<Eigen::Index>(t.order.size());
  Matrix<QPoly> schur(n, n);
  Matrix<QPoly> hl(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = schur_monomials(t.order[static_cast<std::size_t>(i)]);
    const auto& p = hall_littlewood_monomials(t.order[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& mu = t.order[static_cast<std::size_t>(j)];
      auto si = s.find(mu);
      auto pi = p.find(mu);
      schur(i, j) = si == s.end() ? QPoly() : si->second;
      hl(i, j) = pi == p.end() ? QPoly() : pi->second;
    }
  }
  // s = K P and P = K_inv s, all in the monomial basis.
  t.K = multiply(schur, unitriangular_inverse(hl));
  t.K_inv = multiply(hl, unitriangular_inverse(schur));
  return t;
}

}  // namespace

const KostkaTables& kostka_tables(int weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.kostka.find(weight); it != c.kostka.end()) return it->second;
  }
  KostkaTables t = build_kostka(weight);
  std::lock_guard lock(c.mutex);
  return c.kostka.try_emplace(weight, std::move(t)).first->second;
}

std::vector<Rational> q_coefficients(int mmax, Points y, const Rational& q) {
  require_nonnegative(mmax);
  const std::vector<std::string> z{"z"};
  TruncatedSeries product = TruncatedSeries::constant(z, mmax, Rational(1));
  for (const auto& yj : y) {
    TruncatedSeries numerator = TruncatedSeries::constant(z, mmax, Rational(1));
    numerator.add_term({1}, -q * yj);
    TruncatedSeries geometric(z, mmax);
    for (int k = 0; k <= mmax; ++k) geometric.add_term({k}, power(yj, k));
    product = product * numerator * geometric;
  }
  return dense_coefficients(product);
}

Rational q_coeff(int m, Points y, const Rational& q) {
  return q_coefficients(m, y, q)[static_cast<std::size_t>(m)];
}

Rational big_schur_eval(const Partition& lambda, Points y, const Rational& q) {
  const auto qs = q_coefficients(lambda.part(1) + lambda.length(), y, q);
  return jacobi_trudi(lambda, Partition{}, qs);
}

Rational supersymmetric_schur_eval(const Partition& lambda, Points alpha, Points beta) {
  const int n = std::max(lambda.weight(), 1);
  PointSet negated(beta.begin(), beta.end());
  for (auto& b : negated) b = -b;
  const MiwaCoords t = from_points(alpha, n) - from_points(negated, n);
  return schur_in_miwa(lambda, t);
}

TruncatedSeries monomial_series(const Partition& mu, const std::vector<std::string>& variables, std::size_t first,
                                std::size_t count, int cutoff) {
  if (first + count > variables.size()) throw std::invalid_argument("variable block out of range");
  TruncatedSeries out(variables, cutoff);
  if (mu.length() > static_cast<int>(count)) return out;
  std::vector<int> exps = padded(mu, count);
  std::sort(exps.begin(), exps.end());
  Exponents e(variables.size(), 0);
  do {
    for (std::size_t i = 0; i < count; ++i) e[first + i] = exps[i];
    out.add_term(e, Rational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

TruncatedSeries schur_series(const Partition& lambda, const std::vector<std::string>& variables, std::size_t first,
                             std::size_t count, int cutoff) {
  TruncatedSeries out(variables, cutoff);
  for (const auto& [mu, coeff] : schur_monomials(lambda)) {
    out += monomial_series(mu, variables, first, count, cutoff) * coeff.coefficient(0);
  }
  return out;
}

TruncatedSeries hall_littlewood_series(const Partition& lambda, const Rational& q,
                                       const std::vector<std::string>& variables, std::size_t first,
                                       std::size_t count, int cutoff) {
  TruncatedSeries out(variables, cutoff);
  for (const auto& [mu, coeff] : hall_littlewood_monomials(lambda)) {
    const Rational c = coeff(q);
    if (c != 0) out += monomial_series(mu, variables, first, count, cutoff) * c;
  }
  return out;
}

}  // namespace qtau

#pragma once

#include "qtau/linalg.hpp"
#include "qtau/partitions.hpp"
#include "qtau/qpoly.hpp"
#include "qtau/series.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace qtau {

/// Spectral parameters x_1..x_N (or y_1..y_N).
using PointSet = std::vector<Rational>;
using Points = std::span<const Rational>;

enum class Basis { power, elementary, homogeneous };

Rational power_sum(int k, Points x);
Rational elementary(int k, Points x);
Rational complete_homogeneous(int k, Points x);
/// p_k, e_k or h_k evaluated at x. Throws std::invalid_argument for k < 0.
Rational basis_eval(Basis kind, int k, Points x);
/// h_0..h_kmax at x.
std::vector<Rational> complete_homogeneous_sequence(int kmax, Points x);

/// det(h[lambda_i - mu_j - i + j]) of size length(lambda), where h[k] = 0 for k < 0.
/// `h` must cover indices up to lambda_1 + length(lambda) - 1.
Rational jacobi_trudi(const Partition& lambda, const Partition& mu, std::span<const Rational> h);

/// Schur polynomial. Bialternant for pairwise-distinct points, Jacobi-Trudi
/// otherwise; 0 when length(lambda) > |x|.
Rational schur_eval(const Partition& lambda, Points x);
/// det(x_i^{lambda_j + n - j}) / Vandermonde; requires pairwise-distinct points.
Rational schur_bialternant(const Partition& lambda, Points x);
Rational schur_jacobi_trudi(const Partition& lambda, Points x);

/// Skew Schur s_{lambda/mu}(x) via Jacobi-Trudi; 0 when mu is not inside lambda.
Rational skew_schur_eval(const Partition& lambda, const Partition& mu, Points x);

/// Monomial symmetric polynomial m_mu(x).
Rational monomial_eval(const Partition& mu, Points x);

/// Coefficients of m_mu in a symmetric function of fixed weight.
using MonomialExpansion = std::map<Partition, QPoly>;

/// Hall-Littlewood P_lambda in the monomial basis, from the horizontal-strip
/// tableau expansion. Cached per lambda.
const MonomialExpansion& hall_littlewood_monomials(const Partition& lambda);
/// Schur s_lambda in the monomial basis (Kostka numbers as constant QPolys).
const MonomialExpansion& schur_monomials(const Partition& lambda);

/// Hall-Littlewood P_lambda(x; q). Symmetrization over S_n when the points are
/// distinct and the normalization v_lambda(q) is nonzero, otherwise the
/// monomial expansion. 0 when length(lambda) > |x|.
Rational hall_littlewood_eval(const Partition& lambda, Points x, const Rational& q);
/// The symmetrization formula alone; throws std::domain_error if points repeat
/// or v_lambda(q) vanishes.
Rational hall_littlewood_symmetrized(const Partition& lambda, Points x, const Rational& q);
/// The monomial-expansion route alone.
Rational hall_littlewood_from_monomials(const Partition& lambda, Points x, const Rational& q);

/// v_lambda(Q) for lambda padded with zeros to n parts.
QPoly hall_littlewood_norm(const Partition& lambda, int n);

struct KostkaTables {
  int weight = 0;
  std::vector<Partition> order;  // canonical order of the partitions of `weight`
  Matrix<QPoly> K;               // s_lambda = sum_mu K(lambda, mu) P_mu
  Matrix<QPoly> K_inv;           // P_lambda = sum_mu K_inv(lambda, mu) s_mu
  int index_of(const Partition& p) const;
};

/// Kostka-Foulkes tables of one weight. Cached; safe to call concurrently.
const KostkaTables& kostka_tables(int weight);

/// q_0..q_mmax of prod_j (1 - q y_j z) / (1 - y_j z), by series expansion.
std::vector<Rational> q_coefficients(int mmax, Points y, const Rational& q);
Rational q_coeff(int m, Points y, const Rational& q);

/// Big Schur S_lambda(y; q) = det(q_{lambda_i - i + j}).
Rational big_schur_eval(const Partition& lambda, Points y, const Rational& q);

/// Supersymmetric (hook) Schur s_lambda(alpha / beta): the Schur function at
/// Miwa times T_n = (sum alpha^n - sum (-beta)^n) / n.
Rational supersymmetric_schur_eval(const Partition& lambda, Points alpha, Points beta);

/// Symbolic symmetric polynomials as truncated series in a block of variables.
/// `first`/`count` select the block inside `variables`.
TruncatedSeries monomial_series(const Partition& mu, const std::vector<std::string>& variables, std::size_t first,
                                std::size_t count, int cutoff);
TruncatedSeries schur_series(const Partition& lambda, const std::vector<std::string>& variables, std::size_t first,
                             std::size_t count, int cutoff);
TruncatedSeries hall_littlewood_series(const Partition& lambda, const Rational& q,
                                       const std::vector<std::string>& variables, std::size_t first,
                                       std::size_t count, int cutoff);

}  // namespace qtau

#pragma once

#include "qtau/miwa.hpp"
#include "qtau/symfunc.hpp"

#include <vector>

namespace qtau {

/// N particles on a chain with sites 0..M.
struct BoxSpec {
  int N = 0;
  int M = 0;
  BoxSpec() = default;
  BoxSpec(int n, int m);
};

/// sum_{k=1}^{M+N} (z w)^{k-1}, as a polynomial sum.
Rational h_entry(const Rational& z, const Rational& w, const BoxSpec& box);

/// The N x N matrix H(x_i, y_j).
Matrix<Rational> h_matrix(Points x, Points y, const BoxSpec& box);

enum class ScalarMode { det, schur_sum };

/// Off-shell scalar product. det: det H / (Vandermonde(x) Vandermonde(y)),
/// refuses repeated points. schur_sum: sum over lambda in the box of s(x) s(y).
Rational scalar_product(Points x, Points y, const BoxSpec& box, ScalarMode mode);

enum class CorrelationMode { det, skew_sum };

/// Correlation with one particle inserted at site m. Inputs are square roots:
/// x_j = u_j^2, y_k = v_k^2, so every half-integer power is an integer power of u, v.
///
/// det: the closed form built from det Q, where Q agrees with H except for the
/// last column x_j^{(M+N-1-2m)/2}, with all its prefactors; |v| = N and v_N enters
/// only through the prefactors. Needs M+N-1 even.
/// skew_sum: sum over mu in `skew_box` of s_{mu/(m)}(y_1..y_{N-1}) s_mu(x); |v| >= N-1
/// and only the first N-1 values are used.
Rational correlation_Am(Points u, Points v, int m, const BoxSpec& box, CorrelationMode mode);
Rational correlation_Am_skew(Points u, Points v, int m, const BoxSpec& box, const BoxSpec& skew_box);

/// sum over mu in [min(|x|,|y|), M] of s_{mu/lambda1}(x) s_{mu/lambda2}(y).
Rational correlation_skew(const Partition& lambda1, const Partition& lambda2, Points x, Points y,
                          const BoxSpec& box);

struct FactorizationReport {
  Rational correlation;
  Rational factorized;  // box scalar product times sum_nu s_{lambda1/nu}(x) s_{lambda2/nu}(y)
  bool equal = false;
};

/// Compares the correlation against the finite-size factorized form. The
/// comparison is reported, not asserted.
FactorizationReport correlation_factorization(const Partition& lambda1, const Partition& lambda2, Points x, Points y,
                                              const BoxSpec& box);

/// sum over lambda in the box of s_{lambda/nu}(x).
Rational yankee_correlation(const Partition& nu, Points x, const BoxSpec& box);

/// sum over mu in the box of c_mu s_mu(x) s_mu(y), c_mu = prod_i w_i^{n_i(mu)}, n_0 = N - length(mu).
Rational hypergeometric_tau(Points x, Points y, const BoxSpec& box, Points weights);

enum class SignConvention { plus, minus };

/// Constant term in z of (1/n!) prod_l exp(xi(t, z_l) +- xi(t', 1/z_l)) Vandermonde(z) Vandermonde(1/z),
/// keeping the terms of total degree at most `cutoff` in t. n must be 1 or 2.
Rational matrix_integral_constant_term(int n, const MiwaCoords& t, const MiwaCoords& tprime, int cutoff,
                                       SignConvention sign);

/// sum over lambda with length <= n and |lambda| <= cutoff of s_lambda(t) s_lambda(t').
Rational miwa_schur_pairing(int n, const MiwaCoords& t, const MiwaCoords& tprime, int cutoff);

/// det over Frobenius coordinates of the hook coefficients c_{(a_i|b_j)}(y) equals c_lambda(y),
/// with c_lambda = det h_{lambda_i - i + j}(y).
bool giambelli_check(Points y, const Partition& lambda);

/// Vandermonde(q y) = q^{N(N-1)/2} Vandermonde(y).
bool vandermonde_scaling_holds(Points y, const Rational& q);

}  // namespace qtau

#pragma once

#include "qtau/phase_model.hpp"

#include <string>
#include <vector>

namespace qtau {

struct QBosonSpec {
  BoxSpec box;
  Rational q = 0;  // the deformation parameter Q itself
};

enum class QScalarMode { hl_sum, det_quotient, big_schur, twisted_schur };

const std::vector<QScalarMode>& all_qscalar_modes();
std::string to_string(QScalarMode mode);

/// q-boson scalar product over the box [N, M].
/// hl_sum:        sum b_lambda(Q) P_lambda(x; Q) P_lambda(y; Q)
/// det_quotient:  Q^{N(N-1)/2} det H(x, y) / det H(x, Q y), with the power of Q cancelled
///                exactly so Q = 0 is allowed; needs distinct points and a nonzero denominator
/// big_schur:     sum S_lambda(y; Q) s_lambda(x)
/// twisted_schur: sum s_lambda(T) s_lambda(x), T_n = (1 - Q^n) p_n(y) / n
Rational scalar_product_q(Points x, Points y, const QBosonSpec& spec, QScalarMode mode);

/// det H(x, r y) / r^{N(N-1)/2} as a polynomial in r; its value at r = 0 is
/// Vandermonde(x) Vandermonde(y).
QPoly reduced_h_determinant(Points x, Points y, const BoxSpec& box);

/// The mode as a power series in s under x -> s x, through s^degree. The
/// coefficient of s^d is the part of x-degree d.
QPoly graded_scalar_product_q(Points x, Points y, const QBosonSpec& spec, QScalarMode mode, int degree);

/// prod_{j,k} (1 - Q s x_j y_k) / (1 - s x_j y_k) through s^degree.
QPoly graded_cauchy_product(Points x, Points y, const Rational& q, int degree);

/// Kostka-coefficient matrix c~ = K_inv^T diag(b) K_inv over the partitions of weight d.
Matrix<QPoly> c_tilde_matrix(int d);

/// c~ (K diag(b)^{-1} K^T) = identity, computed without leaving polynomials.
bool c_tilde_inverse_holds(int d);

/// S_mu(y; q) = sum_lambda c~_{mu lambda}(q) s_lambda(y).
bool big_schur_coeff_check(const Partition& mu, Points y, const Rational& q);

}  // namespace qtau

namespace qtau {

/// Variables x1..xN, y1..yN for the two-alphabet Cauchy series.
std::vector<std::string> cauchy_variables(int N);
/// sum over lambda in the box of b_lambda P_lambda(x) P_lambda(y), symbolically in x and y,
/// keeping x-degree (= y-degree) at most `degree`; the series cutoff is 2 * degree.
TruncatedSeries hl_cauchy_box_series(const BoxSpec& box, const Rational& q, int degree);
/// prod_{j,k} (1 - Q x_j y_k) / (1 - x_j y_k) in the same window.
TruncatedSeries hl_cauchy_product_series(int N, const Rational& q, int degree);

}  // namespace qtau

#pragma once

#include "qtau/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace qtau {

using Exponents = std::vector<int>;

/// Sparse multivariate power series truncated at a total degree.
///
/// Terms whose total degree exceeds the cutoff are never stored, and zero
/// coefficients are erased, so two series are equal exactly when their term
/// maps are equal.
class TruncatedSeries {
 public:
  TruncatedSeries(std::vector<std::string> variables, int cutoff);

  static TruncatedSeries constant(std::vector<std::string> variables, int cutoff, const Rational& c);
  /// c * prod v_i^{e_i}; zero if the monomial lies beyond the cutoff.
  static TruncatedSeries monomial(std::vector<std::string> variables, int cutoff, const Exponents& e,
                                  const Rational& c = Rational(1));

  const std::vector<std::string>& variables() const { return variables_; }
  int cutoff() const { return cutoff_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  TruncatedSeries truncated(int cutoff) const;
  TruncatedSeries homogeneous_component(int degree) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  void require_same_variables(const TruncatedSeries& rhs) const;

  std::vector<std::string> variables_;
  int cutoff_;
  std::map<Exponents, Rational> terms_;
};

int total_degree(const Exponents& e);

/// Graded product, truncated at min(cutoff_a, cutoff_b).
/// Throws std::invalid_argument if the variable lists differ.
TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// exp(sum_k t_k z^k) through z^cutoff, in the single variable `variable`.
/// t[0] is t_1. The coefficient of z^k is the complete homogeneous h_k(t).
TruncatedSeries exp_generating(std::span<const Rational> t, int cutoff, const std::string& variable = "z");

/// Coefficients of a univariate series as a dense vector (index = degree).
std::vector<Rational> dense_coefficients(const TruncatedSeries& univariate);

}  // namespace qtau

#pragma once

#include "qtau/rational.hpp"

#include <Eigen/Core>

#include <iosfwd>

#include <utility>
#include <vector>

namespace qtau {

/// Univariate polynomial with exact rational coefficients, constant term first.
/// Used for polynomials in the deformation parameter Q, and as a plain
/// univariate ring wherever a formal variable is needed.
class QPoly {
 public:
  QPoly() = default;
  QPoly(int constant);  // NOLINT(google-explicit-constructor): ring literal
  QPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Rational> coefficients);

  /// The monomial Q^n.
  static QPoly monomial(int n, const Rational& coefficient = Rational(1));

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int n) const;
  /// Lowest power with nonzero coefficient; -1 for zero.
  int order() const;

  Rational operator()(const Rational& q) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  /// Exact division; throws std::domain_error when rhs does not divide *this.
  QPoly& operator/=(const QPoly& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator/(QPoly a, const QPoly& b) { return a /= b; }
  QPoly operator-() const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  /// Drops every power above n.
  QPoly truncated(int n) const;
  /// p(c Q) for a scalar c.
  QPoly rescaled(const Rational& c) const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of polynomial long division; divisor must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor);

Rational qpoly_eval(const QPoly& p, const Rational& q);

/// [n]! = prod_{i=1}^n (1 - Q^i), with [0]! = 1.
QPoly q_factorial(int n);

/// 1 + Q + ... + Q^{n-1}.
QPoly q_integer(int n);

/// Power series quotient a / b modulo Q^{n+1}; b must have a nonzero constant term.
QPoly series_divide(const QPoly& a, const QPoly& b, int n);

/// Coefficients as canonical "p/q" strings, constant term first.
std::vector<std::string> coefficient_strings(const QPoly& p);

std::ostream& operator<<(std::ostream& os, const QPoly& p);

}  // namespace qtau

namespace Eigen {

template <>
struct NumTraits<qtau::QPoly> : GenericNumTraits<qtau::QPoly> {
  using Real = qtau::QPoly;
  using NonInteger = qtau::QPoly;
  using Nested = qtau::QPoly;
  using Literal = qtau::QPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen

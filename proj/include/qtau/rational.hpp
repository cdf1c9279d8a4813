#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qtau {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q". The result is always in lowest terms.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals; the empty string is the empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

/// value^exponent for any integer exponent (value must be nonzero if exponent < 0).
Rational power(const Rational& value, int exponent);

/// Exact square root when value is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace qtau

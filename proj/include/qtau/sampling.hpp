#pragma once

#include "qtau/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qtau {

/// Deterministic stream of small random rationals p/q with |p| <= 9, 1 <= q <= 9.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : engine_(seed) {}

  Rational operator()();
  Rational nonzero();
  /// n pairwise-distinct nonzero values.
  std::vector<Rational> distinct(std::size_t n);
  /// n pairwise-distinct nonzero values that are squares of rationals,
  /// returned as their square roots u (so the points are u^2).
  std::vector<Rational> distinct_square_roots(std::size_t n);
  int integer(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qtau

#pragma once

#include "qtau/partitions.hpp"
#include "qtau/rational.hpp"

#include <span>
#include <vector>

namespace qtau {

/// Finitely supported times (t_1, ..., t_nmax); t_n = 0 beyond n_max.
class MiwaCoords {
 public:
  MiwaCoords() = default;
  explicit MiwaCoords(std::vector<Rational> values) : values_(std::move(values)) {}

  int n_max() const { return static_cast<int>(values_.size()); }
  /// t_n, 1-based; 0 beyond the support.
  Rational operator[](int n) const;
  const std::vector<Rational>& values() const { return values_; }

  /// Componentwise; the support of the result is the smaller of the two, so
  /// a combination is never trusted past either operand's support.
  friend MiwaCoords operator+(const MiwaCoords& a, const MiwaCoords& b);
  friend MiwaCoords operator-(const MiwaCoords& a, const MiwaCoords& b);
  friend bool operator==(const MiwaCoords&, const MiwaCoords&) = default;

 private:
  std::vector<Rational> values_;
};

/// t_n = (1/n) sum_j x_j^n for n <= n_max.
MiwaCoords from_points(std::span<const Rational> x, int n_max);

/// T_n = (1 - q^n) t'_n.
MiwaCoords twist(const MiwaCoords& tprime, const Rational& q);

/// h_0..h_kmax of the times, i.e. coefficients of exp(sum t_n z^n).
std::vector<Rational> complete_homogeneous_in_miwa(const MiwaCoords& t, int kmax);

/// det(h_{lambda_i - i + j}(t)). Throws std::invalid_argument when
/// n_max < |lambda|, since the value would silently depend on missing times.
Rational schur_in_miwa(const Partition& lambda, const MiwaCoords& t);

}  // namespace qtau

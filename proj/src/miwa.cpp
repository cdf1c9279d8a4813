#include "qtau/miwa.hpp"

#include "qtau/series.hpp"
#include "qtau/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtau {

Rational MiwaCoords::operator[](int n) const {
  if (n < 1 || n > n_max()) return Rational(0);
  return values_[static_cast<std::size_t>(n - 1)];
}

MiwaCoords operator+(const MiwaCoords& a, const MiwaCoords& b) {
  const int n = std::min(a.n_max(), b.n_max());
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = a[k] + b[k];
  return MiwaCoords(std::move(out));
}

MiwaCoords operator-(const MiwaCoords& a, const MiwaCoords& b) {
  const int n = std::min(a.n_max(), b.n_max());
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = a[k] - b[k];
  return MiwaCoords(std::move(out));
}

MiwaCoords from_points(std::span<const Rational> x, int n_max) {
  if (n_max < 1) throw std::invalid_argument("Miwa support bound must be at least 1");
  std::vector<Rational> t(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) t[static_cast<std::size_t>(n - 1)] = power_sum(n, x) / Rational(n);
  return MiwaCoords(std::move(t));
}

MiwaCoords twist(const MiwaCoords& tprime, const Rational& q) {
  std::vector<Rational> out = tprime.values();
  for (int n = 1; n <= tprime.n_max(); ++n) out[static_cast<std::size_t>(n - 1)] *= Rational(1) - power(q, n);
  return MiwaCoords(std::move(out));
}

std::vector<Rational> complete_homogeneous_in_miwa(const MiwaCoords& t, int kmax) {
  return dense_coefficients(exp_generating(t.values(), kmax));
}

Rational schur_in_miwa(const Partition& lambda, const MiwaCoords& t) {
  if (lambda.empty()) return Rational(1);
  if (t.n_max() < lambda.weight()) {
    throw std::invalid_argument("Miwa support " + std::to_string(t.n_max()) + " is too small for " +
                                to_string(lambda));
  }
  const auto h = complete_homogeneous_in_miwa(t, lambda.part(1) + lambda.length());
  return jacobi_trudi(lambda, Partition{}, h);
}

}  // namespace qtau

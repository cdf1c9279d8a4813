#include "qtau/qpoly.hpp"

#include <ostream>
#include <stdexcept>

namespace qtau {

QPoly::QPoly(int constant) : QPoly(Rational(constant)) {}

QPoly::QPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

QPoly QPoly::monomial(int n, const Rational& coefficient) {
  if (n < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c.back() = coefficient;
  return QPoly(std::move(c));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::coefficient(int n) const {
  if (n < 0 || n > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(n)];
}

int QPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational QPoly::operator()(const Rational& q) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPoly& QPoly::operator/=(const QPoly& rhs) {
  auto [quot, rem] = divmod(*this, rhs);
  if (!rem.is_zero()) throw std::domain_error("QPoly division is not exact");
  *this = std::move(quot);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly QPoly::truncated(int n) const {
  if (n < 0) return QPoly();
  if (degree() <= n) return *this;
  return QPoly(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

QPoly QPoly::rescaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational scale(1);
  for (auto& coeff : out) {
    coeff *= scale;
    scale *= c;
  }
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& dividend, const QPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("QPoly division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const int dd = divisor.degree();
  const Rational lead = divisor.coefficients().back();
  if (dividend.degree() < dd) return {QPoly(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd) + 1);
  for (int k = dividend.degree() - dd; k >= 0; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= factor * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

Rational qpoly_eval(const QPoly& p, const Rational& q) { return p(q); }

QPoly q_factorial(int n) {
  QPoly out(1);
  for (int i = 1; i <= n; ++i) out *= QPoly(1) - QPoly::monomial(i);
  return out;
}

QPoly q_integer(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n > 0 ? n : 0), Rational(1));
  return QPoly(std::move(c));
}

QPoly series_divide(const QPoly& a, const QPoly& b, int n) {
  const Rational b0 = b.coefficient(0);
  if (b0 == 0) throw std::domain_error("series division by a series without constant term");
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = a.coefficient(k);
    for (int j = 1; j <= k && j <= b.degree(); ++j) acc -= b.coefficient(j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc / b0;
  }
  return QPoly(std::move(out));
}

std::vector<std::string> coefficient_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Rational c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (k == 0 || c != 1) os << to_string(c);
    if (k > 0 && c != 1) os << "*";
    if (k == 1) os << "Q";
    if (k > 1) os << "Q^" << k;
  }
  return os;
}

}  // namespace qtau

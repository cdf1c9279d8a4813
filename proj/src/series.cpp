#include "qtau/series.hpp"

#include <numeric>
#include <stdexcept>

namespace qtau {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

TruncatedSeries::TruncatedSeries(std::vector<std::string> variables, int cutoff)
    : variables_(std::move(variables)), cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("series cutoff must be nonnegative");
}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> variables, int cutoff, const Rational& c) {
  TruncatedSeries s(std::move(variables), cutoff);
  s.add_term(Exponents(s.variables_.size(), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::vector<std::string> variables, int cutoff, const Exponents& e,
                                          const Rational& c) {
  TruncatedSeries s(std::move(variables), cutoff);
  s.add_term(e, c);
  return s;
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != variables_.size()) throw std::invalid_argument("exponent tuple has the wrong arity");
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent in a power series");
  }
  if (c == 0 || total_degree(e) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TruncatedSeries TruncatedSeries::truncated(int cutoff) const {
  TruncatedSeries out(variables_, cutoff);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous_component(int degree) const {
  TruncatedSeries out(variables_, cutoff_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

void TruncatedSeries::require_same_variables(const TruncatedSeries& rhs) const {
  if (variables_ != rhs.variables_) throw std::invalid_argument("series have mismatched variable lists");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_variables(rhs);
  cutoff_ = std::min(cutoff_, rhs.cutoff_);
  *this = truncated(cutoff_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_variables(rhs);
  cutoff_ = std::min(cutoff_, rhs.cutoff_);
  *this = truncated(cutoff_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.variables_ == b.variables_ && a.terms_ == b.terms_;
}

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.variables() != b.variables()) throw std::invalid_argument("series have mismatched variable lists");
  const int cutoff = std::min(a.cutoff(), b.cutoff());
  TruncatedSeries out(a.variables(), cutoff);
  Exponents e(a.variables().size());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    if (da > cutoff) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > cutoff) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_product(a, b); }

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const Exponents zero(a.variables().size(), 0);
  const Rational a0 = a.coefficient(zero);
  if (a0 == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  // 1/a = (1/a0) * sum_k (-r)^k with r = a/a0 - 1, which has no constant term.
  TruncatedSeries r = a * (Rational(1) / a0);
  r.add_term(zero, Rational(-1));
  TruncatedSeries neg_r = r * Rational(-1);
  TruncatedSeries out = TruncatedSeries::constant(a.variables(), a.cutoff(), Rational(1));
  TruncatedSeries power = out;
  for (int k = 1; k <= a.cutoff(); ++k) {
    power = series_product(power, neg_r);
    if (power.is_zero()) break;
    out += power;
  }
  return out * (Rational(1) / a0);
}

TruncatedSeries exp_generating(std::span<const Rational> t, int cutoff, const std::string& variable) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  // n h_n = sum_{k=1}^n k t_k h_{n-k}
  std::vector<Rational> h(static_cast<std::size_t>(cutoff) + 1);
  h[0] = 1;
  for (int n = 1; n <= cutoff; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n && k <= static_cast<int>(t.size()); ++k) {
      acc += Rational(k) * t[static_cast<std::size_t>(k - 1)] * h[static_cast<std::size_t>(n - k)];
    }
    h[static_cast<std::size_t>(n)] = acc / Rational(n);
  }
  TruncatedSeries out({variable}, cutoff);
  for (int n = 0; n <= cutoff; ++n) out.add_term({n}, h[static_cast<std::size_t>(n)]);
  return out;
}

std::vector<Rational> dense_coefficients(const TruncatedSeries& univariate) {
  if (univariate.variables().size() != 1) throw std::invalid_argument("series is not univariate");
  std::vector<Rational> out(static_cast<std::size_t>(univariate.cutoff()) + 1);
  for (const auto& [e, c] : univariate.terms()) out[static_cast<std::size_t>(e[0])] = c;
  return out;
}

}  // namespace qtau

#include "qtau/sampling.hpp"

#include <algorithm>

namespace qtau {

int RandomRationals::integer(int lo, int hi) {
  // Plain modular reduction keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Rational RandomRationals::operator()() {
  const int p = integer(-9, 9);
  const int q = integer(1, 9);
  return Rational(p, q);
}

Rational RandomRationals::nonzero() {
  for (;;) {
    Rational r = (*this)();
    if (r != 0) return r;
  }
}

std::vector<Rational> RandomRationals::distinct(std::size_t n) {
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational r = nonzero();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

std::vector<Rational> RandomRationals::distinct_square_roots(std::size_t n) {
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational u = nonzero();
    const bool clash = std::any_of(out.begin(), out.end(), [&](const Rational& v) { return v * v == u * u; });
    if (!clash) out.push_back(u);
  }
  return out;
}

}  // namespace qtau

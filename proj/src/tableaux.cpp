#include "qtau/tableaux.hpp"

#include <algorithm>

namespace qtau {

void for_each_tableau(const Partition& lambda, const Partition& mu, int n,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (!contains(lambda, mu)) return;
  std::vector<std::pair<int, int>> cells;
  for (int r = 1; r <= lambda.length(); ++r) {
    for (int c = mu.part(r) + 1; c <= lambda.part(r); ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()) + 1,
                                     std::vector<int>(static_cast<std::size_t>(lambda.part(1)) + 1, 0));
  std::vector<int> content(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  auto at = [&](int r, int c) -> int& { return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(content);
      return;
    }
    const auto [r, c] = cells[k];
    int lo = 1;
    if (c > mu.part(r) + 1) lo = std::max(lo, at(r, c - 1));
    if (r > 1 && c > mu.part(r - 1)) lo = std::max(lo, at(r - 1, c) + 1);
    for (int v = lo; v <= n; ++v) {
      at(r, c) = v;
      ++content[static_cast<std::size_t>(v)];
      fill(k + 1);
      --content[static_cast<std::size_t>(v)];
    }
    at(r, c) = 0;
  };
  fill(0);
}

long tableau_kostka_number(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return 0;
  long count = 0;
  const int n = mu.length();
  for_each_tableau(lambda, Partition{}, n, [&](const std::vector<int>& content) {
    for (int i = 1; i <= n; ++i) {
      if (content[static_cast<std::size_t>(i)] != mu.part(i)) return;
    }
    ++count;
  });
  return count;
}

Rational skew_schur_by_tableaux(const Partition& lambda, const Partition& mu, const std::vector<Rational>& x) {
  Rational acc(0);
  const int n = static_cast<int>(x.size());
  for_each_tableau(lambda, mu, n, [&](const std::vector<int>& content) {
    Rational term(1);
    for (int i = 1; i <= n; ++i) term *= power(x[static_cast<std::size_t>(i - 1)], content[static_cast<std::size_t>(i)]);
    acc += term;
  });
  return acc;
}

}  // namespace qtau

#include "doctest.h"

#include "qtau/partitions.hpp"

#include <boost/math/special_functions/binomial.hpp>

using namespace qtau;

TEST_CASE("partition validation") {
  CHECK(Partition{3, 1, 0}.parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition{3, 3, 1}.weight() == 7);
  CHECK(Partition{3, 3, 1}.multiplicity(3) == 2);
  CHECK(to_string(Partition{2, 1}) == "(2,1)");
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{3, 3, 1}) == Partition{3, 2, 2});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("frobenius coordinates") {
  CHECK(frobenius(Partition{}).rank() == 0);
  CHECK(frobenius(Partition{1}).pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(frobenius(Partition{3, 3, 1}).pairs == std::vector<std::pair<int, int>>{{2, 2}, {1, 0}});
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      const auto f = frobenius(p);
      int total = f.rank();
      for (const auto& [a, b] : f.pairs) total += a + b;
      CHECK(total == n);
      CHECK(from_frobenius(f) == p);
    }
  }
}

TEST_CASE("box enumeration") {
  CHECK(enumerate_in_box(0, 3) == std::vector<Partition>{Partition{}});
  const std::vector<Partition> two_two{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}};
  CHECK(enumerate_in_box(2, 2) == two_two);
  CHECK(enumerate_in_box(1, 4).size() == 5);
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= 6; ++m) {
      const auto box = enumerate_in_box(n, m);
      CHECK(box.size() == static_cast<std::size_t>(boost::math::binomial_coefficient<double>(n + m, n)));
      CHECK(std::is_sorted(box.begin(), box.end(), canonical_less));
    }
  }
}

TEST_CASE("partition counts and canonical order") {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
  // Dominance implies canonical order within a weight.
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (i != j && dominates(ps[i], ps[j])) CHECK(i < j);
      }
    }
  }
}

TEST_CASE("horizontal strips") {
  CHECK(is_horizontal_strip(Partition{3, 1}, Partition{1}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1}));
  CHECK_FALSE(is_horizontal_strip(Partition{1, 1}, Partition{}));
  for (int n = 0; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        const auto strips = remove_horizontal_strips(lambda, k);
        for (const auto& mu : strips) {
          CHECK(is_horizontal_strip(lambda, mu));
          CHECK(mu.weight() == n - k);
        }
        std::size_t brute = 0;
        for (const auto& mu : subpartitions(lambda)) {
          if (mu.weight() == n - k && is_horizontal_strip(lambda, mu)) ++brute;
        }
        CHECK(strips.size() == brute);
      }
    }
  }
}

TEST_CASE("b_lambda") {
  const QPoly one_minus_q = QPoly(1) - QPoly::monomial(1);
  CHECK(b_lambda(Partition{}) == QPoly(1));
  CHECK(b_lambda(Partition{1, 1}) == one_minus_q * (QPoly(1) - QPoly::monomial(2)));
  CHECK(b_lambda(Partition{2, 1}) == one_minus_q * one_minus_q);
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) CHECK(b_lambda(p)(Rational(0)) == 1);
  }
}

TEST_CASE("occupation correspondence") {
  CHECK(occupation_from_partition(Partition{}, 2, 2).counts == std::vector<int>{2, 0, 0});
  CHECK(occupation_from_partition(Partition{2, 1}, 2, 3).counts == std::vector<int>{0, 1, 1, 0});
  CHECK(occupation_from_partition(Partition{2, 2}, 3, 2).counts == std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(occupation_from_partition(Partition{3}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(occupation_from_partition(Partition{1, 1, 1}, 2, 2), std::invalid_argument);
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const auto& p : enumerate_in_box(n, m)) {
        const auto s = occupation_from_partition(p, n, m);
        CHECK(s.particles() == n);
        CHECK(partition_from_occupation(s) == p);
      }
    }
  }
}

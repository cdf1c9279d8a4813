#pragma once

// Brute-force semistandard tableau enumeration, used as an independent
// reference for Kostka numbers and skew Schur values.

#include "qtau/partitions.hpp"
#include "qtau/rational.hpp"

#include <functional>
#include <vector>

namespace qtau {

/// Visits every semistandard filling of lambda/mu with entries 1..n, passing
/// the content vector (index i holds the count of entry i; index 0 unused).
void for_each_tableau(const Partition& lambda, const Partition& mu, int n,
                      const std::function<void(const std::vector<int>&)>& visit);

/// Number of semistandard tableaux of shape lambda and content mu.
long tableau_kostka_number(const Partition& lambda, const Partition& mu);

/// s_{lambda/mu}(x) as a sum over tableaux.
Rational skew_schur_by_tableaux(const Partition& lambda, const Partition& mu, const std::vector<Rational>& x);

}  // namespace qtau

#pragma once

#include "qtau/qpoly.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qtau {

/// Integer partition / Young diagram. Parts are weakly decreasing and positive;
/// the empty partition has no parts. Ordered structurally (lexicographic on
/// parts) so it can key associative containers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Trailing zeros are dropped; throws std::invalid_argument if the sequence
  /// is not weakly decreasing or has negative entries.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 1-based i; 0 beyond the length.
  int part(int i) const;
  /// Number of parts equal to size (p_i(lambda) for i >= 1).
  int multiplicity(int size) const;
  bool fits_in_box(int rows, int max_part) const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

struct FrobeniusCoords {
  std::vector<std::pair<int, int>> pairs;  // (a_j, b_j), a = arm, b = leg
  int rank() const { return static_cast<int>(pairs.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

/// Occupation numbers (n_0, ..., n_M) of the sites of a chain.
struct OccupationState {
  std::vector<int> counts;
  int particles() const;
  auto operator<=>(const OccupationState&) const = default;
  bool operator==(const OccupationState&) const = default;
};

Partition conjugate(const Partition& p);
FrobeniusCoords frobenius(const Partition& p);
/// The hook partition (a+1, 1^b).
Partition from_frobenius(const FrobeniusCoords& f);

/// mu subset-of lambda as diagrams.
bool contains(const Partition& lambda, const Partition& mu);
/// lambda dominates mu (same weight assumed by callers; returns false otherwise).
bool dominates(const Partition& lambda, const Partition& mu);
/// lambda/mu is a horizontal strip (at most one box per column).
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

/// Canonical order: by weight, then reverse lexicographic within a weight,
/// e.g. (2) before (1,1). Dominance implies this order within a weight.
bool canonical_less(const Partition& a, const Partition& b);

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n);
/// All lambda with at most `rows` parts and lambda_1 <= max_part, canonical order.
std::vector<Partition> enumerate_in_box(int rows, int max_part);
/// All mu contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);
/// All mu with lambda/mu a horizontal strip of `size` boxes.
std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int size);

/// b_lambda(Q) = prod_i [p_i(lambda)]!.
QPoly b_lambda(const Partition& p);

/// Occupation state of lambda in the `particles`-particle sector of a chain with
/// sites 0..max_part; n_0 = particles - length. Throws if lambda is outside the box.
OccupationState occupation_from_partition(const Partition& p, int particles, int max_part);
Partition partition_from_occupation(const OccupationState& s);

}  // namespace qtau

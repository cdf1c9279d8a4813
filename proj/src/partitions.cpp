#include "qtau/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qtau {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::multiplicity(int size) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), size));
}

bool Partition::fits_in_box(int rows, int max_part) const {
  return length() <= rows && part(1) <= max_part;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts()[i]);
  }
  return out + ")";
}

int OccupationState::particles() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Partition conjugate(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(1)), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

FrobeniusCoords frobenius(const Partition& p) {
  const Partition c = conjugate(p);
  FrobeniusCoords f;
  for (int j = 1; p.part(j) >= j; ++j) f.pairs.emplace_back(p.part(j) - j, c.part(j) - j);
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  const int d = f.rank();
  if (d == 0) return {};
  // rows 1..d from arms; the rest from the legs via the conjugate rows.
  std::vector<int> rows(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) rows[static_cast<std::size_t>(j)] = f.pairs[static_cast<std::size_t>(j)].first + j + 1;
  std::vector<int> cols(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) cols[static_cast<std::size_t>(j)] = f.pairs[static_cast<std::size_t>(j)].second + j + 1;
  // row i > d has length #{j : cols_j >= i}
  const int max_len = cols.empty() ? 0 : cols[0];
  for (int i = d + 1; i <= max_len; ++i) {
    int len = 0;
    for (int c : cols) len += c >= i ? 1 : 0;
    rows.push_back(len);
  }
  return Partition(std::move(rows));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i) {
    if (mu.part(i) > lambda.part(i)) return false;
  }
  return true;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) return false;
  int a = 0;
  int b = 0;
  const int n = std::max(lambda.length(), mu.length());
  for (int i = 1; i <= n; ++i) {
    a += lambda.part(i);
    b += mu.part(i);
    if (a < b) return false;
  }
  return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  if (!contains(lambda, mu)) return false;
  // interlacing: lambda_{i+1} <= mu_i
  for (int i = 1; i < lambda.length(); ++i) {
    if (lambda.part(i + 1) > mu.part(i)) return false;
  }
  return true;
}

bool canonical_less(const Partition& a, const Partition& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  return b.parts() < a.parts();
}

namespace {

void generate(int remaining, int max_part, int rows_left, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate(remaining - part, part, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_in_box(int rows, int max_part) {
  if (rows < 0 || max_part < 0) throw std::invalid_argument("box dimensions must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  for (int w = 0; w <= rows * max_part; ++w) generate(w, max_part, rows, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current(static_cast<std::size_t>(lambda.length()), 0);
  // odometer over mu_i <= min(lambda_i, mu_{i-1})
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == lambda.length()) {
      out.emplace_back(current);
      return;
    }
    const int bound = i == 0 ? lambda.part(1) : std::min(lambda.part(i + 1), current[static_cast<std::size_t>(i - 1)]);
    for (int v = 0; v <= bound; ++v) {
      current[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
    current[static_cast<std::size_t>(i)] = 0;
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda, int size) {
  // mu with lambda_{i+1} <= mu_i <= lambda_i and |lambda| - |mu| = size
  std::vector<Partition> out;
  const int n = lambda.length();
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int i, int removed) -> void {
    if (i == n) {
      if (removed == size) out.emplace_back(current);
      return;
    }
    const int hi = lambda.part(i + 1);
    const int lo = lambda.part(i + 2);
    for (int v = hi; v >= lo; --v) {
      const int r = removed + (hi - v);
      if (r > size) break;
      current[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, r);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

QPoly b_lambda(const Partition& p) {
  QPoly out(1);
  for (std::size_t i = 0; i < p.parts().size();) {
    std::size_t j = i;
    while (j < p.parts().size() && p.parts()[j] == p.parts()[i]) ++j;
    out *= q_factorial(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

OccupationState occupation_from_partition(const Partition& p, int particles, int max_part) {
  if (!p.fits_in_box(particles, max_part)) {
    throw std::invalid_argument("partition " + to_string(p) + " does not fit in the box");
  }
  OccupationState s;
  s.counts.assign(static_cast<std::size_t>(max_part) + 1, 0);
  s.counts[0] = particles - p.length();
  for (int part : p.parts()) ++s.counts[static_cast<std::size_t>(part)];
  return s;
}

Partition partition_from_occupation(const OccupationState& s) {
  std::vector<int> parts;
  for (int i = static_cast<int>(s.counts.size()) - 1; i >= 1; --i) {
    if (s.counts[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("negative occupation");
    for (int k = 0; k < s.counts[static_cast<std::size_t>(i)]; ++k) parts.push_back(i);
  }
  return Partition(std::move(parts));
}

}  // namespace qtau

#pragma once

#include "qtau/rational.hpp"
#include "qtau/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qtau {

struct SizeCaps {
  int n_max = 4;
  int m_max = 6;
  int cutoff = 8;
};

/// Desk-scale caps; QTAU_MAX_SIZE=K raises every cap to at least K.
SizeCaps size_caps();

struct SuiteConfig {
  std::string suite;
  int n_max = 3;
  int m_max = 3;
  int cutoff = 6;  // degree or weight bound, depending on the suite
  std::vector<Rational> q_values{Rational(1, 4), Rational(1, 3), Rational(2, 5)};
  std::uint64_t seed = 1;
  int trials = 3;
};

const std::vector<std::string>& registered_suites();

/// Throws std::invalid_argument for an unknown suite or out-of-range bounds.
void validate(const SuiteConfig& config);

/// Runs the suite's checks in a fixed order. Same config, same report.
Report run_suite(const SuiteConfig& config);

}  // namespace qtau
